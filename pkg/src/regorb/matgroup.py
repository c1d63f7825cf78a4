"""Matrix groups over a FieldSpec: closure enumeration and conjugacy data.

Groups are enumerated by breadth-first closure from their generators, with a
fixed generator order, so element indices are reproducible across runs.  Over
prime fields the closure runs on batched numpy products; extension fields use
exact scalar arithmetic through the field's multiplication tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import CapExceeded, SingularGenerator
from .gfield import FieldElement, FieldSpec, is_prime

DEFAULT_CAP = 10**7


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

class Mat:
    """Immutable square matrix over a FieldSpec.

    Entries are stored as encoded integers (row-major tuple of row tuples);
    ``entry(i, j)`` wraps one back into a FieldElement.
    """

    __slots__ = ("spec", "d", "rows", "_hash")

    def __init__(self, spec: FieldSpec, rows):
        rows = tuple(tuple(r) for r in rows)
        d = len(rows)
        if any(len(r) != d for r in rows):
            raise ValueError("matrix must be square")
        q = spec.q
        for r in rows:
            for e in r:
                if not 0 <= e < q:
                    raise ValueError(f"entry {e} outside field of size {q}")
        self.spec = spec
        self.d = d
        self.rows = rows
        self._hash = hash((spec, rows))

    # -- constructors --------------------------------------------------------

    @classmethod
    def identity(cls, spec: FieldSpec, d: int) -> "Mat":
        return cls(spec, [[1 if i == j else 0 for j in range(d)] for i in range(d)])

    @classmethod
    def scalar(cls, spec: FieldSpec, d: int, lam: int) -> "Mat":
        return cls(spec, [[lam if i == j else 0 for j in range(d)] for i in range(d)])

    @classmethod
    def from_array(cls, spec: FieldSpec, arr) -> "Mat":
        return cls(spec, [[int(v) for v in row] for row in arr])

    def to_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64)

    # -- basics ---------------------------------------------------------------

    def entry(self, i: int, j: int) -> FieldElement:
        return self.spec.element(self.rows[i][j])

    def __eq__(self, other):
        return (isinstance(other, Mat) and self.spec == other.spec
                and self.rows == other.rows)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Mat({self.spec}, {list(map(list, self.rows))})"

    def key(self) -> bytes:
        """Deterministic byte key (row-major encoded entries)."""
        if self.spec.q <= 256:
            return bytes(e for row in self.rows for e in row)
        out = bytearray()
        for row in self.rows:
            for e in row:
                out += e.to_bytes(4, "little")
        return bytes(out)

    # -- arithmetic ------------------------------------------------------------

    def __mul__(self, other: "Mat") -> "Mat":
        if self.spec != other.spec or self.d != other.d:
            raise ValueError("incompatible matrices")
        from .gfield import _ops

        ops = _ops(self.spec)
        mul, add = ops.mul, ops.add
        bt = tuple(zip(*other.rows))  # columns of other
        out = []
        for arow in self.rows:
            orow = []
            for bcol in bt:
                acc = 0
                for a, b in zip(arow, bcol):
                    if a and b:
                        acc = add(acc, mul(a, b))
                orow.append(acc)
            out.append(tuple(orow))
        return Mat(self.spec, out)

    def apply(self, vec: tuple[int, ...]) -> tuple[int, ...]:
        """Matrix-vector product on encoded coordinate tuples."""
        from .gfield import _ops

        ops = _ops(self.spec)
        mul, add = ops.mul, ops.add
        out = []
        for row in self.rows:
            acc = 0
            for a, v in zip(row, vec):
                if a and v:
                    acc = add(acc, mul(a, v))
            out.append(acc)
        return tuple(out)

    def __pow__(self, e: int) -> "Mat":
        if e < 0:
            return self.inverse() ** (-e)
        result = Mat.identity(self.spec, self.d)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "Mat":
        from .gfield import _ops

        ops = _ops(self.spec)
        d = self.d
        a = [list(r) + [1 if i == j else 0 for j in range(d)]
             for i, r in enumerate(self.rows)]
        for col in range(d):
            piv = next((r for r in range(col, d) if a[r][col]), None)
            if piv is None:
                raise SingularGenerator("matrix is singular")
            a[col], a[piv] = a[piv], a[col]
            inv = ops.inv(a[col][col])
            a[col] = [ops.mul(inv, v) for v in a[col]]
            for r in range(d):
                if r != col and a[r][col]:
                    c = a[r][col]
                    a[r] = [ops.sub(v, ops.mul(c, w)) for v, w in zip(a[r], a[col])]
        return Mat(self.spec, [row[d:] for row in a])

    def is_invertible(self) -> bool:
        try:
            self.inverse()
            return True
        except SingularGenerator:
            return False

    def is_identity(self) -> bool:
        return all(e == (1 if i == j else 0)
                   for i, row in enumerate(self.rows) for j, e in enumerate(row))

    def is_scalar(self) -> bool:
        lam = self.rows[0][0]
        return all(e == (lam if i == j else 0)
                   for i, row in enumerate(self.rows) for j, e in enumerate(row))

    def order(self, cap: int = 10**7) -> int:
        """Multiplicative order of an invertible matrix."""
        x = self
        t = 1
        ident = Mat.identity(self.spec, self.d)
        while x != ident:
            x = x * self
            t += 1
            if t > cap:
                raise CapExceeded("element order exceeds cap")
        return t


def kron(a: Mat, b: Mat) -> Mat:
    """Kronecker product, acting on the tensor product space."""
    from .gfield import _ops

    ops = _ops(a.spec)
    da, db = a.d, b.d
    rows = []
    for i in range(da):
        for k in range(db):
            row = []
            for j in range(da):
                for l in range(db):
                    row.append(ops.mul(a.rows[i][j], b.rows[k][l]))
            rows.append(row)
    return Mat(a.spec, rows)


# ---------------------------------------------------------------------------
# group enumeration
# ---------------------------------------------------------------------------

@dataclass
class GroupEnumeration:
    """A fully enumerated matrix group with deterministic element order."""

    spec: FieldSpec
    d: int
    generators: list[Mat]
    order: int
    scalar_values: tuple[int, ...]  # encoded lambdas with lambda*I in G
    _array: np.ndarray | None = field(default=None, repr=False)  # prime fields
    _rows_list: list[tuple] | None = field(default=None, repr=False)

    @property
    def scalar_subgroup(self) -> list[Mat]:
        return [Mat.scalar(self.spec, self.d, lam) for lam in self.scalar_values]

    def element(self, idx: int) -> Mat:
        if self._array is not None:
            return Mat.from_array(self.spec, self._array[idx])
        return Mat(self.spec, self._rows_list[idx])

    def elements(self):
        for i in range(self.order):
            yield self.element(i)

    @cached_property
    def index(self) -> dict[bytes, int]:
        """Byte-key -> element index (built lazily; O(|G|) memory)."""
        out = {}
        for i in range(self.order):
            out[self.element(i).key()] = i
        return out

    def contains(self, m: Mat) -> bool:
        return m.key() in self.index

    def index_of(self, m: Mat) -> int:
        return self.index[m.key()]


_CHUNK = 1 << 17


def _enumerate_numpy(spec, d, gens, cap):
    """Batched BFS closure over a prime field.

    Products run through float64 matmul (BLAS); entries stay below 2^53 so
    the arithmetic is exact, and results are reduced mod p afterwards.
    Elements are stored as raw bytes, shared with the dedup dict keys.
    """
    p = spec.p
    dtype = np.uint8 if p < 256 else np.uint16
    garrs = np.stack([g.to_array() for g in gens]).astype(np.float64)
    n_gens = len(gens)
    ident_b = np.eye(d, dtype=dtype).tobytes()
    keys = {ident_b: 0}
    elems = [ident_b]
    frontier = [ident_b]
    while frontier:
        new = []
        for lo in range(0, len(frontier), _CHUNK):
            blk = frontier[lo:lo + _CHUNK]
            fr = np.frombuffer(b"".join(blk), dtype=dtype)
            fr = fr.reshape(len(blk), d, d).astype(np.float64)
            # (f, g, i, k) products in frontier-major, generator-minor order
            prod = np.matmul(fr[:, None, :, :], garrs[None, :, :, :])
            prod = (prod.astype(np.int64) % p).astype(dtype)
            prod = prod.reshape(len(blk) * n_gens, d * d)
            n = len(elems)
            for row in prod:
                kb = row.tobytes()
                if kb not in keys:
                    keys[kb] = n
                    n += 1
                    elems.append(kb)
                    new.append(kb)
            if n > cap:
                raise CapExceeded(f"group exceeds enumeration cap {cap}")
        frontier = new
    arr = np.frombuffer(b"".join(elems), dtype=dtype).reshape(-1, d, d)
    del keys
    return arr


def _enumerate_python(spec, d, gens, cap):
    """Dict-based BFS closure with exact field arithmetic (any field)."""
    ident = Mat.identity(spec, d)
    seen = {ident.rows: 0}
    elems = [ident.rows]
    frontier = [ident]
    while frontier:
        new = []
        for f in frontier:
            for g in gens:
                m = f * g
                if m.rows not in seen:
                    seen[m.rows] = len(elems)
                    elems.append(m.rows)
                    new.append(m)
                    if len(elems) > cap:
                        raise CapExceeded(f"group exceeds enumeration cap {cap}")
        frontier = new
    return elems


def enumerate_group(gens: list[Mat], cap: int = DEFAULT_CAP) -> GroupEnumeration:
    """Breadth-first closure of the generators into a full group listing."""
    if not gens:
        raise ValueError("at least one generator required (use the identity)")
    spec, d = gens[0].spec, gens[0].d
    if any(g.spec != spec or g.d != d for g in gens):
        raise ValueError("generators must share one field and dimension")
    for g in gens:
        if not g.is_invertible():
            raise SingularGenerator("generator is not invertible")
    if cap < 1:
        raise ValueError("cap must be positive")

    arr = None
    rows_list = None
    if spec.k == 1:
        arr = _enumerate_numpy(spec, d, gens, cap)
        order = len(arr)
        diag = arr[:, range(d), range(d)]
        off = arr.copy()
        off[:, range(d), range(d)] = 0
        scal_mask = (off.reshape(order, -1).max(axis=1) == 0) & \
                    (diag.min(axis=1) == diag.max(axis=1))
        scalars = tuple(sorted(int(arr[i, 0, 0]) for i in np.nonzero(scal_mask)[0]))
    else:
        rows_list = _enumerate_python(spec, d, gens, cap)
        order = len(rows_list)
        scalars = tuple(sorted(
            rows[0][0] for rows in rows_list
            if Mat(spec, rows).is_scalar()))
    return GroupEnumeration(spec, d, list(gens), order, scalars, arr, rows_list)


def adjoin_scalars(G: GroupEnumeration, lams) -> GroupEnumeration:
    """Extend an enumerated group by central scalar matrices lambda*I.

    Elements are listed in scalar-coset blocks (coset representatives in
    ascending encoded order, G's order within each block), which is the
    deterministic order contract for this constructor.
    """
    spec = G.spec
    from .gfield import _ops

    ops = _ops(spec)
    # subgroup of F^x generated by existing scalars and the new ones
    lam_group = {1}
    frontier = set(lams) | set(G.scalar_values)
    while frontier:
        new = set()
        for a in lam_group:
            for b in frontier:
                c = ops.mul(a, b)
                if c not in lam_group and c not in new:
                    new.add(c)
        lam_group |= new
        frontier = new
    if 0 in lam_group:
        raise SingularGenerator("scalar 0 is not invertible")
    # coset representatives of the scalars already inside G
    inside = set(G.scalar_values)
    reps = []
    covered: set[int] = set()
    for lam in sorted(lam_group):
        if lam in covered:
            continue
        reps.append(lam)
        covered |= {ops.mul(lam, s) for s in inside}
    new_order = len(reps) * G.order
    new_scalars = tuple(sorted(lam_group))
    gens = list(G.generators) + [Mat.scalar(spec, G.d, lam) for lam in lams]
    if G._array is not None:
        arr = G._array
        blocks = [arr if lam == 1 else (arr.astype(np.int64) * lam) % spec.p
                  for lam in reps]
        new_arr = np.concatenate([b.astype(arr.dtype) for b in blocks])
        return GroupEnumeration(spec, G.d, gens, new_order, new_scalars,
                                new_arr, None)
    rows_list = []
    for lam in reps:
        for rows in G._rows_list:
            if lam == 1:
                rows_list.append(rows)
            else:
                rows_list.append(tuple(tuple(ops.mul(lam, e) for e in row)
                                       for row in rows))
    return GroupEnumeration(spec, G.d, gens, new_order, new_scalars,
                            None, rows_list)


# ---------------------------------------------------------------------------
# projective orders and conjugacy classes
# ---------------------------------------------------------------------------

def projective_order(g: Mat) -> tuple[int, FieldElement]:
    """Least a >= 1 with g^a scalar, together with that scalar value."""
    x = g
    a = 1
    while not x.is_scalar():
        x = x * g
        a += 1
    return a, g.spec.element(x.rows[0][0])


@dataclass(frozen=True)
class ClassDatum:
    """One H-conjugacy class of projective prime order, H = G/F(G)."""

    rep: Mat
    class_size: int  # |x^H|
    elt_order: int  # order of the stored representative in G
    proj_order: int  # o(x) in H; prime
    unipotent: bool  # proj_order equals the field characteristic

    def __repr__(self):
        tag = "u" if self.unipotent else "s"
        return (f"ClassDatum(o={self.proj_order}{tag}, size={self.class_size}, "
                f"|rep|={self.elt_order})")


def _coset_key(m: Mat, scalar_values) -> bytes:
    """Canonical key of the coset {lam*m}: minimum element key."""
    if len(scalar_values) == 1:
        return m.key()
    spec = m.spec
    from .gfield import _ops

    ops = _ops(spec)
    best = None
    for lam in scalar_values:
        if lam == 1:
            cand = m.key()
        else:
            rows = tuple(tuple(ops.mul(lam, e) for e in row) for row in m.rows)
            cand = Mat(spec, rows).key()
        if best is None or cand < best:
            best = cand
    return best


def prime_projective_classes(G: GroupEnumeration) -> list[ClassDatum]:
    """Conjugacy class data for elements of projective prime order.

    One datum per H-class, H = G/F(G); class sizes are H-class sizes, i.e.
    elements are counted modulo the scalar subgroup.
    """
    spec = G.spec
    scalars = G.scalar_values
    n_scal = len(scalars)

    # canonical coset representatives, in element order
    coset_rep_idx: dict[bytes, int] = {}
    for i in range(G.order):
        m = G.element(i)
        ck = _coset_key(m, scalars)
        if ck not in coset_rep_idx:
            coset_rep_idx[ck] = i
    assert len(coset_rep_idx) * n_scal == G.order

    gens = G.generators
    gen_invs = [g.inverse() for g in gens]
    out: list[ClassDatum] = []
    classified: set[bytes] = set()
    for ck, idx in coset_rep_idx.items():
        if ck in classified:
            continue
        m = G.element(idx)
        a, _ = projective_order(m)
        if a == 1 or not is_prime(a):
            classified.add(ck)
            continue
        # conjugation orbit of the coset under the generators
        orbit = {ck}
        frontier = [m]
        while frontier:
            new = []
            for x in frontier:
                for g, gi in zip(gens, gen_invs):
                    y = gi * x * g
                    yk = _coset_key(y, scalars)
                    if yk not in orbit:
                        orbit.add(yk)
                        new.append(y)
            frontier = new
        classified |= orbit
        out.append(ClassDatum(
            rep=m,
            class_size=len(orbit),
            elt_order=m.order(),
            proj_order=a,
            unipotent=(a == spec.p),
        ))
    # deterministic order: by projective order, then class size, then rep key
    out.sort(key=lambda c: (c.proj_order, c.class_size, c.rep.key()))
    return out

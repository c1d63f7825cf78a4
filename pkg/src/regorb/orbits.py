"""Ground truth at desk scale: orbits, stabilizers, exact base sizes.

Vectors are indexed by packed integers (coordinate 0 least significant, each
coordinate its encoded field value), and all bulk arithmetic runs over the
prime field: an extension field GF(p^k) is replaced by k-by-k multiplication
blocks, which leaves the packed indices unchanged.  Matrix batches go through
float64 matmul, exact below 2^53.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import SpaceCapExceeded
from .gfield import FieldSpec, is_prime
from .matgroup import GroupEnumeration, Mat, projective_order
from .spectral import kernel_basis

DEFAULT_SPACE_CAP = 10**7


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

@dataclass
class BaseReport:
    """Everything the pipeline knows about b(G) for one (G, V) pair."""

    group_label: str
    d: int
    r: int
    group_order: int
    b_lower: int
    b_exact: int | None = None
    regular_witness: tuple[int, ...] | None = None
    method: str = "enumeration"  # enumeration | certificate | mixed

    def __post_init__(self):
        if self.b_exact is not None:
            assert self.b_exact >= self.b_lower
            has_witness = self.regular_witness is not None
            assert has_witness == (self.b_exact <= 1)


@dataclass
class CoverReport:
    """Result of the covering scan: how much of V the fixed spaces fill."""

    covered: int
    total: int

    @property
    def fully_covered(self) -> bool:
        return self.covered == self.total

    @property
    def regular_orbit_exists(self) -> bool:
        return not self.fully_covered


def b_lower(group_order: int, r: int, d: int) -> int:
    """Least b >= 0 with |V|^b >= |G|, by exact integer powering."""
    if group_order < 1:
        raise ValueError("group order must be positive")
    size = r**d
    b, power = 0, 1
    while power < group_order:
        power *= size
        b += 1
    return b


# ---------------------------------------------------------------------------
# the prime-field action engine
# ---------------------------------------------------------------------------

def blowup_matrix(m: Mat) -> np.ndarray:
    """Prime-field matrix of m acting on V viewed over GF(p)."""
    spec = m.spec
    p, k, d = spec.p, spec.k, m.d
    if k == 1:
        return m.to_array()
    big = np.zeros((d * k, d * k), dtype=np.int64)
    for i in range(d):
        for j in range(d):
            e = m.rows[i][j]
            if not e:
                continue
            for t in range(k):
                img = spec.mul(e, spec.encode([0] * t + [1]))
                digits = spec.decode(img)
                for s in range(k):
                    big[i * k + s, j * k + t] = digits[s]
    return big


class ActionEngine:
    """Bulk action of an enumerated group on its vector space."""

    _CHUNK = 1 << 16

    def __init__(self, G: GroupEnumeration, space_cap: int = DEFAULT_SPACE_CAP):
        spec = G.spec
        self.G = G
        self.p = spec.p
        self.D = G.d * spec.k
        self.size = spec.q**G.d
        if self.size > space_cap:
            raise SpaceCapExceeded(
                f"|V| = {self.size} exceeds the scan cap {space_cap}")
        self.powers = self.p ** np.arange(self.D, dtype=np.int64)
        self._digit_cache: np.ndarray | None = None

    # -- vector packing ------------------------------------------------------

    def digits_of(self, idx: np.ndarray) -> np.ndarray:
        out = np.empty((len(idx), self.D), dtype=np.int64)
        rem = idx.astype(np.int64)
        for t in range(self.D):
            rem, out[:, t] = np.divmod(rem, self.p)
        return out

    def all_digits(self) -> np.ndarray:
        if self._digit_cache is None:
            self._digit_cache = self.digits_of(np.arange(self.size))
        return self._digit_cache

    def index_to_vector(self, idx: int) -> tuple[int, ...]:
        """Packed index -> encoded field coordinates (length d)."""
        spec = self.G.spec
        out = []
        rem = idx
        for _ in range(self.G.d):
            rem, r = divmod(rem, spec.q)
            out.append(r)
        return tuple(out)

    # -- generator permutations ------------------------------------------------

    def generator_perms(self) -> list[np.ndarray]:
        perms = []
        for g in self.G.generators:
            B = blowup_matrix(g).astype(np.float64)
            perm = np.empty(self.size, dtype=np.int64)
            for lo in range(0, self.size, self._CHUNK):
                hi = min(lo + self._CHUNK, self.size)
                dig = self.digits_of(np.arange(lo, hi))
                img = (dig.astype(np.float64) @ B.T).astype(np.int64) % self.p
                perm[lo:hi] = img @ self.powers
            perms.append(perm)
        return perms

    # -- whole-group element matrices ---------------------------------------------

    def element_blocks(self, indices=None) -> np.ndarray:
        """(n, D, D) float64 array of (selected) group elements, blown up."""
        G = self.G
        if G._array is not None and G.spec.k == 1:
            arr = G._array if indices is None else G._array[indices]
            return arr.astype(np.float64)
        idxs = range(G.order) if indices is None else indices
        mats = [blowup_matrix(G.element(int(i))) for i in idxs]
        return np.stack(mats).astype(np.float64)

    def stabilizer_mask(self, blocks: np.ndarray, vec_digits: np.ndarray
                        ) -> np.ndarray:
        """(n, V') bool: which elements fix which of the given vectors."""
        n = len(blocks)
        nv = len(vec_digits)
        out = np.empty((n, nv), dtype=bool)
        vt = vec_digits.astype(np.float64).T  # (D, V')
        chunk = max(1, (1 << 22) // max(1, nv * self.D))
        for lo in range(0, n, chunk):
            hi = min(lo + chunk, n)
            prod = (blocks[lo:hi] @ vt).astype(np.int64) % self.p  # (c, D, V')
            out[lo:hi] = (prod == vec_digits.T[None, :, :]).all(axis=1)
        return out


# ---------------------------------------------------------------------------
# orbit partition and regular orbit search
# ---------------------------------------------------------------------------

def _orbit_from(start: int, perms, visited) -> np.ndarray:
    frontier = np.array([start], dtype=np.int64)
    visited[start] = True
    members = [frontier]
    while len(frontier):
        nxt = np.unique(np.concatenate([perm[frontier] for perm in perms]))
        nxt = nxt[~visited[nxt]]
        visited[nxt] = True
        members.append(nxt)
        frontier = nxt
    return np.concatenate(members)


def regular_orbit_search(G: GroupEnumeration,
                         space_cap: int = DEFAULT_SPACE_CAP
                         ) -> tuple[int, ...] | None:
    """First vector (in packed-index order) whose orbit has size |G|.

    Scanning indices in ascending order visits each orbit exactly once, at
    its minimal element, so the returned witness is reproducible.  Returns
    None when no orbit is regular.
    """
    eng = ActionEngine(G, space_cap)
    if G.order == 1:
        return eng.index_to_vector(0)  # the zero vector: every orbit regular
    if G.order > eng.size:
        return None  # no orbit can be as large as the group
    perms = eng.generator_perms()
    visited = np.zeros(eng.size, dtype=bool)
    for start in range(eng.size):
        if visited[start]:
            continue
        orbit = _orbit_from(start, perms, visited)
        if len(orbit) == G.order:
            return eng.index_to_vector(start)
    return None


def orbit_partition_sizes(G: GroupEnumeration,
                          space_cap: int = DEFAULT_SPACE_CAP) -> list[int]:
    """Sizes of all orbits of G on V (including the zero vector's)."""
    eng = ActionEngine(G, space_cap)
    perms = eng.generator_perms()
    visited = np.zeros(eng.size, dtype=bool)
    sizes = []
    for start in range(eng.size):
        if not visited[start]:
            sizes.append(len(_orbit_from(start, perms, visited)))
    return sizes


def stabilizer_order(G: GroupEnumeration, vec: tuple[int, ...],
                     space_cap: int = DEFAULT_SPACE_CAP) -> int:
    """|Stab_G(v)| by direct scan over the enumerated elements."""
    eng = ActionEngine(G, space_cap)
    spec = G.spec
    digits = []
    for coord in vec:
        digits.extend(spec.decode(coord))
    dig = np.array([digits], dtype=np.int64)
    blocks = eng.element_blocks()
    return int(eng.stabilizer_mask(blocks, dig)[:, 0].sum())


# ---------------------------------------------------------------------------
# covering scan: the independent no-regular-orbit oracle
# ---------------------------------------------------------------------------

def _mark_span(marks: np.ndarray, basis, p: int, powers: np.ndarray):
    """Set marks at every packed index in the span of the given basis."""
    m = len(basis)
    if m == 0:
        marks[0] = True
        return
    B = np.array(basis, dtype=np.int64)  # (m, D)
    count = p**m
    coeffs = np.empty((count, m), dtype=np.int64)
    rem = np.arange(count, dtype=np.int64)
    for t in range(m):
        rem, coeffs[:, t] = np.divmod(rem, p)
    vecs = (coeffs @ B) % p
    marks[vecs @ powers] = True


def covering_scan(G: GroupEnumeration,
                  space_cap: int = DEFAULT_SPACE_CAP) -> CoverReport:
    """Mark every vector fixed by some element of projective prime order.

    Scanning all of G automatically includes every scalar twist of every
    class representative.  The scan is linear-algebraic (kernel spans of
    g - I), fully independent of the orbit machinery, so it serves as an
    oracle for it: the space is fully covered iff no regular orbit exists.
    """
    eng = ActionEngine(G, space_cap)
    marks = np.zeros(eng.size, dtype=bool)
    seen_spaces: set = set()
    spec = G.spec
    for i in range(G.order):
        m = G.element(i)
        if m.is_scalar():
            continue
        a, _ = projective_order(m)
        if not is_prime(a):
            continue
        basis = _fixed_basis_prime_field(m)
        if not basis:
            continue
        key = tuple(basis)
        if key in seen_spaces:
            continue
        seen_spaces.add(key)
        _mark_span(marks, basis, spec.p, eng.powers)
    covered = int(marks.sum())
    if covered == 0 and G.order > 1:
        # fixed spaces of covering elements always contain the zero vector;
        # covered = 0 only when no projective-prime-order element exists
        pass
    return CoverReport(covered, eng.size)


def _fixed_basis_prime_field(m: Mat) -> list[tuple[int, ...]]:
    """Echelonized basis of C_V(m), in prime-field coordinates."""
    spec = m.spec
    from .gfield import _ops

    ops = _ops(spec)
    rows = [[ops.sub(e, 1 if i == j else 0) for j, e in enumerate(row)]
            for i, row in enumerate(m.rows)]
    basis = kernel_basis(spec, rows)
    if spec.k == 1:
        return [tuple(v) for v in basis]
    out = []
    # an F_q-basis vector spans k prime-field directions
    for v in basis:
        for t in range(k_power := spec.k):
            scl = spec.encode([0] * t + [1])
            w = []
            for coord in v:
                w.extend(spec.decode(ops.mul(scl, coord)))
            out.append(tuple(w))
    return _echelonize_gfp(out, spec.p)


def _echelonize_gfp(vectors, p):
    rows = [list(v) for v in vectors]
    n = len(rows[0]) if rows else 0
    ech = []
    pivots = []
    for v in rows:
        v = list(v)
        for pcol, bv in zip(pivots, ech):
            if v[pcol]:
                c = v[pcol]
                v = [(x - c * y) % p for x, y in zip(v, bv)]
        lead = next((i for i, x in enumerate(v) if x), None)
        if lead is None:
            continue
        inv = pow(v[lead], p - 2, p)
        v = [x * inv % p for x in v]
        ech.append(v)
        pivots.append(lead)
    order = sorted(range(len(ech)), key=lambda i: pivots[i])
    return [tuple(ech[i]) for i in order]


# ---------------------------------------------------------------------------
# exact base size
# ---------------------------------------------------------------------------

class _BaseSearch:
    """Iterative-deepening search over pointwise-stabilizer states.

    A state is the current stabilizer as a sorted element-index set; two
    candidate vectors with the same stabilizer set continue identically, so
    children are deduplicated by the stabilizer they produce and results are
    memoized per (state, budget).
    """

    def __init__(self, G: GroupEnumeration, space_cap: int):
        self.G = G
        self.eng = ActionEngine(G, space_cap)
        self.all_digits = self.eng.all_digits()
        self.memo_true: dict[bytes, int] = {}  # least budget known to succeed
        self.memo_false: dict[bytes, int] = {}  # largest budget known to fail
        self._root_children: list[np.ndarray] | None = None

    # -- leaf test: can one more vector kill the stabilizer? --------------------

    def _one_step(self, stab_idx: np.ndarray) -> bool:
        marks = np.zeros(self.eng.size, dtype=bool)
        seen = set()
        for i in stab_idx:
            if i == 0:
                continue  # identity fixes everything but is allowed to stay
            m = self.G.element(int(i))
            basis = _fixed_basis_prime_field(m)
            if len(basis) == self.eng.D:
                return False  # a non-identity element acting trivially
            key = tuple(basis)
            if key in seen:
                continue
            seen.add(key)
            _mark_span(marks, basis, self.eng.p, self.eng.powers)
        return bool((~marks).any())

    # -- children ------------------------------------------------------------------

    def _children(self, stab_idx: np.ndarray) -> list[np.ndarray]:
        blocks = self.eng.element_blocks(stab_idx)
        mask = self.eng.stabilizer_mask(blocks, self.all_digits)  # (s, V)
        packed = np.packbits(mask, axis=0)
        _, first_cols = np.unique(packed, axis=1, return_index=True)
        out = []
        for v in sorted(first_cols):
            sub = stab_idx[mask[:, v]]
            if len(sub) < len(stab_idx):
                out.append(sub)
        out.sort(key=len)
        return out

    def exists(self, stab_idx: np.ndarray, budget: int) -> bool:
        if len(stab_idx) == 1:
            return True
        if budget <= 0:
            return False
        if len(stab_idx) > self.eng.size**budget:
            return False  # one vector divides the stabilizer by at most |V|
        key = stab_idx.tobytes()
        if key in self.memo_true and self.memo_true[key] <= budget:
            return True
        if key in self.memo_false and self.memo_false[key] >= budget:
            return False
        if budget == 1:
            ok = self._one_step(stab_idx)
        else:
            ok = False
            for child in self._children(stab_idx):
                if self.exists(child, budget - 1):
                    ok = True
                    break
        if ok:
            self.memo_true[key] = min(self.memo_true.get(key, budget), budget)
        else:
            self.memo_false[key] = max(self.memo_false.get(key, 0), budget)
        return ok

    # -- root level: orbits of G ------------------------------------------------------

    def root_children(self) -> list[np.ndarray]:
        if self._root_children is not None:
            return self._root_children
        perms = self.eng.generator_perms()
        visited = np.zeros(self.eng.size, dtype=bool)
        reps = []
        for start in range(self.eng.size):
            if not visited[start]:
                _orbit_from(start, perms, visited)
                if start:  # the zero vector never shrinks the stabilizer
                    reps.append(start)
        blocks_all = self.eng.element_blocks()
        children = []
        for rep in reps:
            dig = self.all_digits[rep:rep + 1]
            mask = self.eng.stabilizer_mask(blocks_all, dig)[:, 0]
            sub = np.nonzero(mask)[0].astype(np.int64)
            if len(sub) < self.G.order:
                children.append(sub)
        children.sort(key=len)
        self._root_children = children
        return children


def base_size_exact(G: GroupEnumeration,
                    space_cap: int = DEFAULT_SPACE_CAP,
                    max_size: int = 64) -> int:
    """Minimal number of vectors whose pointwise stabilizer is trivial."""
    if G.order == 1:
        return 0
    search = _BaseSearch(G, space_cap)
    start = max(1, b_lower(G.order, G.spec.q, G.d))
    roots = search.root_children()
    for c in range(start, max_size + 1):
        for child in roots:
            if len(child) == 1 or search.exists(child, c - 1):
                return c
    raise AssertionError(f"no base of size <= {max_size} found")

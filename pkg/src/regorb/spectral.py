"""Eigenstructure of group elements: fixed spaces, eigenspace profiles, twists.

Geometric multiplicities are what the certificates need, so every dimension
here is d - rank(g - lambda*I) computed by exact Gaussian elimination, over
the base field or over the extension field generated by an eigenvalue.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gfield import FieldSpec, Poly, embed_encoded, factor_poly, make_field, roots
from .matgroup import Mat

_VERIFY_CONJUGATE_ROOTS = False  # debug switch: recompute at a second root


# ---------------------------------------------------------------------------
# linear algebra helpers (encoded entries, any FieldSpec)
# ---------------------------------------------------------------------------

def rank(spec: FieldSpec, rows) -> int:
    """Rank of a matrix given as a list of lists of encoded entries."""
    from .gfield import _ops

    ops = _ops(spec)
    a = [list(r) for r in rows]
    n_rows = len(a)
    n_cols = len(a[0]) if a else 0
    rk = 0
    for col in range(n_cols):
        piv = next((r for r in range(rk, n_rows) if a[r][col]), None)
        if piv is None:
            continue
        a[rk], a[piv] = a[piv], a[rk]
        inv = ops.inv(a[rk][col])
        a[rk] = [ops.mul(inv, v) for v in a[rk]]
        for r in range(n_rows):
            if r != rk and a[r][col]:
                c = a[r][col]
                a[r] = [ops.sub(v, ops.mul(c, w)) for v, w in zip(a[r], a[rk])]
        rk += 1
        if rk == n_rows:
            break
    return rk


def kernel_basis(spec: FieldSpec, rows) -> list[tuple[int, ...]]:
    """Basis of the right kernel, echelonized, deterministic."""
    from .gfield import _ops

    ops = _ops(spec)
    a = [list(r) for r in rows]
    n_rows = len(a)
    n = len(a[0]) if a else 0
    pivots: dict[int, int] = {}
    rk = 0
    for col in range(n):
        piv = next((r for r in range(rk, n_rows) if a[r][col]), None)
        if piv is None:
            continue
        a[rk], a[piv] = a[piv], a[rk]
        inv = ops.inv(a[rk][col])
        a[rk] = [ops.mul(inv, v) for v in a[rk]]
        for r in range(n_rows):
            if r != rk and a[r][col]:
                c = a[r][col]
                a[r] = [ops.sub(v, ops.mul(c, w)) for v, w in zip(a[r], a[rk])]
        pivots[col] = rk
        rk += 1
    basis = []
    for col in range(n):
        if col in pivots:
            continue
        v = [0] * n
        v[col] = 1
        for pc, pr in pivots.items():
            v[pc] = ops.neg(a[pr][col])
        basis.append(tuple(v))
    return basis


def eigenspace_dim(g: Mat, lam: int) -> int:
    """Geometric multiplicity of the encoded eigenvalue lam (0 if none)."""
    spec = g.spec
    from .gfield import _ops

    ops = _ops(spec)
    rows = [[ops.sub(e, lam if i == j else 0) for j, e in enumerate(row)]
            for i, row in enumerate(g.rows)]
    return g.d - rank(spec, rows)


def fixed_space_dim(g: Mat) -> int:
    """dim C_V(g) = d - rank(g - I) over the base field."""
    return eigenspace_dim(g, 1)


def fixed_space_basis(g: Mat) -> list[tuple[int, ...]]:
    spec = g.spec
    from .gfield import _ops

    ops = _ops(spec)
    rows = [[ops.sub(e, 1 if i == j else 0) for j, e in enumerate(row)]
            for i, row in enumerate(g.rows)]
    return kernel_basis(spec, rows)


# ---------------------------------------------------------------------------
# characteristic polynomial (Berkowitz: division-free, deterministic)
# ---------------------------------------------------------------------------

def char_poly(g: Mat) -> Poly:
    """Monic characteristic polynomial det(xI - g) via Berkowitz's algorithm."""
    from .gfield import _ops

    spec = g.spec
    ops = _ops(spec)
    mul, add, sub, neg = ops.mul, ops.add, ops.sub, ops.neg
    n = g.d
    a = g.rows
    if n == 0:
        return Poly.one(spec)

    # vector of coefficients, lowest degree last; starts with [1, -a00]
    coeffs = [1, neg(a[0][0])]
    for i in range(1, n):
        # principal submatrix A_i = a[:i][:i], row r = a[i][:i], col c = a[:i][i]
        row = a[i][:i]
        col = [a[r][i] for r in range(i)]
        corner = a[i][i]
        # Toeplitz column: [1, -corner, -(row·col), -(row·A_i·col), ...]
        t = [1, neg(corner)]
        v = col
        for _ in range(i):
            dot = 0
            for x, y in zip(row, v):
                if x and y:
                    dot = add(dot, mul(x, y))
            t.append(neg(dot))
            v = [_dotrow(ops, a, r, v, i) for r in range(i)]
        # multiply the Toeplitz matrix into coeffs
        new = [0] * (len(coeffs) + 1)
        for r in range(len(new)):
            acc = 0
            for s, cs in enumerate(coeffs):
                k = r - s
                if 0 <= k < len(t) and t[k] and cs:
                    acc = add(acc, mul(t[k], cs))
            new[r] = acc
        coeffs = new
    return Poly(spec, list(reversed(coeffs)))


def _dotrow(ops, a, r, v, size):
    acc = 0
    for c in range(size):
        x = a[r][c]
        y = v[c]
        if x and y:
            acc = ops.add(acc, ops.mul(x, y))
    return acc


# ---------------------------------------------------------------------------
# eigenvalue profiles over the algebraic closure
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EigenProfile:
    """Eigenspace dimensions of one element over the algebraic closure.

    ``entries`` pairs each irreducible factor of the characteristic
    polynomial with the geometric eigenspace dimension at any one of its
    roots (conjugate roots share the dimension); ``emax`` is the maximum.
    """

    element_label: str
    entries: tuple[tuple[Poly, int], ...]  # (field class, per-root dimension)
    emax: int

    @property
    def dims(self) -> tuple[int, ...]:
        """All eigenspace dimensions, one per root, descending."""
        out = []
        for f, dim in self.entries:
            out.extend([dim] * f.degree)
        return tuple(sorted(out, reverse=True))

    def notation(self) -> str:
        """Index notation, e.g. (16,12^2), descending dimensions."""
        dims = self.dims
        parts = []
        i = 0
        while i < len(dims):
            j = i
            while j < len(dims) and dims[j] == dims[i]:
                j += 1
            parts.append(f"{dims[i]}^{j - i}" if j - i > 1 else str(dims[i]))
            i = j
        return "(" + ",".join(parts) + ")"


def _lift_matrix(g: Mat, big: FieldSpec) -> Mat:
    rows = [[embed_encoded(e, g.spec, big) for e in row] for row in g.rows]
    return Mat(big, rows)


def eigen_profile(g: Mat, label: str = "") -> EigenProfile:
    """Factor the characteristic polynomial; record per-root eigenspace dims.

    Roots of one irreducible factor are Frobenius-conjugate so their
    eigenspaces have equal dimension; only the least root is used (with an
    optional debug check at a second root).
    """
    spec = g.spec
    cp = char_poly(g)
    entries = []
    lifted: dict[int, Mat] = {}
    for f, _mult in factor_poly(cp):
        e = f.degree
        if e == 1:
            lam = spec.neg(f.coeffs[0])
            dim = eigenspace_dim(g, lam)
        else:
            big = make_field(spec.p, spec.k * e)
            if e not in lifted:
                lifted[e] = _lift_matrix(g, big)
            gb = lifted[e]
            fb = Poly(big, [embed_encoded(c, spec, big) for c in f.coeffs])
            rs = roots(fb)
            dim = eigenspace_dim(gb, rs[0])
            if _VERIFY_CONJUGATE_ROOTS and len(rs) > 1:
                assert eigenspace_dim(gb, rs[1]) == dim, "conjugate root mismatch"
        assert dim >= 1, "roots of the characteristic polynomial are eigenvalues"
        entries.append((f, dim))
    emax = max(dim for _, dim in entries)
    return EigenProfile(label, tuple(entries), emax)


# ---------------------------------------------------------------------------
# base-field twist profiles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TwistProfile:
    """dim C_V(kappa * g) for every kappa in the base field's units.

    C_V(kappa g) is the eigenspace of g at kappa^{-1}, so the profile lists
    the rational eigenspace dimensions of g indexed by the twisting scalar.
    """

    dims: tuple[tuple[int, int], ...]  # (encoded kappa, dimension), all kappa

    def as_dict(self) -> dict[int, int]:
        return dict(self.dims)

    def support(self) -> tuple[tuple[int, int], ...]:
        return tuple((k, d) for k, d in self.dims if d > 0)

    def max_dim(self) -> int:
        return max(d for _, d in self.dims)

    def total(self) -> int:
        return sum(d for _, d in self.dims)


def twist_profile(g: Mat) -> TwistProfile:
    """Profile of dim C_V(kappa g) over all kappa in F^x."""
    spec = g.spec
    out = []
    for kappa in range(1, spec.q):
        lam = spec.inv(kappa)
        out.append((kappa, eigenspace_dim(g, lam)))
    return TwistProfile(tuple(out))

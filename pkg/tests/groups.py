"""Constructions of the standard groups and modules used across the tests.

Everything here is built from first principles (permutation modules, root
systems, forms, induced representations), so expected group orders act as
independent checks on the enumeration machinery rather than inputs to it.
"""

from __future__ import annotations

from functools import lru_cache

from regorb.gfield import make_field
from regorb.matgroup import Mat, enumerate_group

# ---------------------------------------------------------------------------
# small linear groups with hand-written generators
# ---------------------------------------------------------------------------


def l3_2_gens():
    """GL_3(2) = L_3(2): a transvection and a cyclic permutation; order 168."""
    F = make_field(2, 1)
    a = Mat(F, [[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    b = Mat(F, [[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    return [a, b]


def sl2_gens(p, k=1):
    """SL_2(q) via its two standard transvections."""
    F = make_field(p, k)
    a = Mat(F, [[1, 1], [0, 1]])
    b = Mat(F, [[1, 0], [1, 1]])
    if k == 1:
        return [a, b]
    # extension fields need a transvection with a generating scalar too
    g = F.p  # encoding of the generator x
    c = Mat(F, [[1, g], [0, 1]])
    return [a, b, c]


# ---------------------------------------------------------------------------
# permutation modules
# ---------------------------------------------------------------------------


def perm_mat(F, perm):
    """Permutation matrix sending e_i to e_perm[i]."""
    n = len(perm)
    rows = [[0] * n for _ in range(n)]
    for i, j in enumerate(perm):
        rows[j][i] = 1
    return Mat(F, rows)


def deleted_perm_module(p, perms):
    """Matrices of the permutation action on the deleted permutation module.

    Over GF(p) with p coprime to the number of points n, the sum-zero
    subspace is an (n-1)-dimensional complement of the all-ones vector; for
    p | n the all-ones vector lies inside it and the fully deleted module is
    the (n-2)-dimensional section.  Basis: b_i = e_i - e_{n-1}, i < n-1,
    reduced modulo the all-ones vector in the p | n case.
    """
    F = make_field(p, 1)
    n = len(perms[0])
    full_delete = n % p == 0
    dim = n - 2 if full_delete else n - 1
    mats = []
    for perm in perms:
        # image of b_i = e_i - e_{n-1} is b_{perm(i)} - b_{perm(n-1)}
        # with the convention b_{n-1} = 0
        cols = []
        for i in range(dim):
            vec = [0] * (n - 1)
            if perm[i] != n - 1:
                vec[perm[i]] += 1
            if perm[n - 1] != n - 1:
                vec[perm[n - 1]] -= 1
            cols.append([c % p for c in vec])
        if full_delete:
            # reduce mod <all-ones> = <b_0 + ... + b_{n-2}>: eliminate b_{n-2}
            red = []
            for vec in cols:
                c = vec[n - 2]
                red.append([(v - c) % p for v in vec[: n - 2]])
            cols = red
        rows = [[cols[j][i] for j in range(dim)] for i in range(dim)]
        mats.append(Mat(F, rows))
    return mats


def a5_on_v4_gf2():
    """L_2(4) = Alt(5) on its 4-dimensional GF(2) module (deleted 5-point)."""
    five_cycle = [1, 2, 3, 4, 0]
    three_cycle = [1, 2, 0, 3, 4]
    return deleted_perm_module(2, [five_cycle, three_cycle])


def s6_on_v4_gf2():
    """L_2(9).2_1 = Sym(6) on its 4-dimensional GF(2) module (fully deleted)."""
    six_cycle = [1, 2, 3, 4, 5, 0]
    transposition = [1, 0, 2, 3, 4, 5]
    return deleted_perm_module(2, [six_cycle, transposition])


def a6_on_v4_gf2():
    """L_2(9) = Alt(6) inside the fully deleted 6-point module."""
    g1 = [1, 2, 0, 4, 5, 3]  # (012)(345)
    g2 = [1, 2, 3, 4, 0, 5]  # (01234)
    return deleted_perm_module(2, [g1, g2])


# ---------------------------------------------------------------------------
# orthogonal groups in characteristic 2 via quadratic-form transvections
# ---------------------------------------------------------------------------


def _minus_type_quadratic_form_gf2():
    """Q on F_2^6 of minus type: x0x1 + x2x3 + x4^2 + x4x5 + x5^2."""

    def Q(v):
        return (v[0] & v[1]) ^ (v[2] & v[3]) ^ v[4] ^ (v[4] & v[5]) ^ v[5]

    def B(u, v):  # polarization Q(u+v) + Q(u) + Q(v)
        w = [a ^ b for a, b in zip(u, v)]
        return Q(w) ^ Q(u) ^ Q(v)

    return Q, B


def _o6_minus_transvections():
    """All orthogonal transvections t_v: x -> x + B(x, v) v with Q(v) = 1."""
    F = make_field(2, 1)
    Q, B = _minus_type_quadratic_form_gf2()
    vecs = []
    for e in range(1, 64):
        v = [(e >> i) & 1 for i in range(6)]
        if Q(v) == 1:
            vecs.append(v)
    mats = []
    basis = [[1 if i == j else 0 for j in range(6)] for i in range(6)]
    for v in vecs:
        cols = []
        for b in basis:
            img = [x ^ (B(b, v) & y) for x, y in zip(b, v)]
            cols.append(img)
        rows = [[cols[j][i] for j in range(6)] for i in range(6)]
        mats.append(Mat(F, rows))
    return mats


@lru_cache(maxsize=1)
def u4_2_gens_v6_gf2():
    """U_4(2) = Omega_6^-(2) on its natural V_6(2).

    The orthogonal group in even characteristic is generated by its
    transvections, and products of pairs t_0 t_i generate the index-2
    kernel of the Dickson invariant, which is Omega_6^-(2) = SU_4(2).
    A small generating subset is selected by deterministic search.
    """
    ts = _o6_minus_transvections()
    pair_gens = [ts[0] * t for t in ts[1:]]
    for a_idx in range(3):
        for b_idx in range(a_idx + 1, 12):
            pair = [pair_gens[a_idx], pair_gens[b_idx]]
            if enumerate_group(pair, cap=60000).order == 25920:
                return pair
    return pair_gens  # guaranteed generating set, just larger


@lru_cache(maxsize=1)
def u4_2_ext_gens_v6_gf2():
    """U_4(2).2 = O_6^-(2) on V_6(2): Omega generators plus one transvection."""
    ts = _o6_minus_transvections()
    return list(u4_2_gens_v6_gf2()) + [ts[0]]


# ---------------------------------------------------------------------------
# Weyl group of E7 on its reflection lattice mod 3
# ---------------------------------------------------------------------------

_E7_CARTAN = [
    # Bourbaki numbering: node 2 is the branch node attached to node 4
    [2, 0, -1, 0, 0, 0, 0],
    [0, 2, 0, -1, 0, 0, 0],
    [-1, 0, 2, -1, 0, 0, 0],
    [0, -1, -1, 2, -1, 0, 0],
    [0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, -1, 2, -1],
    [0, 0, 0, 0, 0, -1, 2],
]


def e7_simple_reflections(p=3):
    """Simple reflections of W(E7) on the root lattice basis, reduced mod p."""
    F = make_field(p, 1)
    C = _E7_CARTAN
    mats = []
    for i in range(7):
        rows = [[(1 if r == c else 0) for c in range(7)] for r in range(7)]
        # s_i(alpha_j) = alpha_j - C[i][j] alpha_i  (columns are images)
        for j in range(7):
            rows[i][j] = (rows[i][j] - C[i][j]) % p
        mats.append(Mat(F, rows))
    return mats


def psp6_2_gens_v7_gf3():
    """PSp_6(2) = W(E7)' on V_7(3).

    The rotation subgroup is generated by products of pairs of simple
    reflections; this particular pair of even words was found by seeded
    search and generates the full 1451520-element group.
    """
    s = e7_simple_reflections(3)
    a = s[5] * s[2]
    b = s[3] * s[6] * s[5] * s[1] * s[4] * s[0]
    return [a, b]


def two_psp6_2_gens_v7_gf3():
    """2 x PSp_6(2) = W(E7) on V_7(3): rotation generators plus -I."""
    F = make_field(3, 1)
    return psp6_2_gens_v7_gf3() + [Mat.scalar(F, 7, 2)]


# ---------------------------------------------------------------------------
# L_2(13) and L_2(13).2 on V_14(2) via a mod-2 principal series
# ---------------------------------------------------------------------------


def _pgl2_13_setup():
    """Projective line data for PGL_2(13)."""
    p = 13
    points = list(range(p)) + ["inf"]  # x -> [x : 1], inf -> [1 : 0]

    def act(m, pt):
        a, b, c, d = m
        if pt == "inf":
            num, den = a, c
        else:
            num, den = (a * pt + b) % p, (c * pt + d) % p
        if den == 0:
            return "inf"
        return num * pow(den, p - 2, p) % p

    return p, points, act


def _induced_rep_f4(m):
    """14x14 matrix over GF(4) of m in PGL_2(13) on Ind_B^G(chi), chi of order 3.

    Coset representatives: t_x = [[x, 1], [1, 0]] maps B to the point x (via
    action on inf), t_inf = identity.  chi([[a,b],[0,d]]) = omega^(dlog(a/d) mod 3),
    with dlog base 2 (2 generates F_13^x).
    """
    F4 = make_field(2, 2)
    omega = 2  # encoding of the generator of GF(4), a cube root of unity
    p = 13
    dlog = {}
    x = 1
    for e in range(12):
        dlog[x] = e
        x = x * 2 % p

    def chi(a, d):
        return [1, omega, F4.mul(omega, omega)][dlog[a * pow(d, p - 2, p) % p] % 3]

    pts = list(range(p)) + ["inf"]

    def rep(pt):  # matrix with t_pt . inf = pt
        if pt == "inf":
            return (1, 0, 0, 1)
        return (pt % p, 1, 1, 0)

    def act(mm, pt):
        a, b, c, d = mm
        if pt == "inf":
            num, den = a, c
        else:
            num, den = (a * pt + b) % p, (c * pt + d) % p
        return "inf" if den == 0 else num * pow(den, p - 2, p) % p

    def minv(mm):
        a, b, c, d = mm
        det = (a * d - b * c) % p
        di = pow(det, p - 2, p)
        return (d * di % p, (-b) * di % p, (-c) * di % p, a * di % p)

    def mmul(m1, m2):
        a, b, c, d = m1
        e, f, g, h = m2
        return ((a * e + b * g) % p, (a * f + b * h) % p,
                (c * e + d * g) % p, (c * f + d * h) % p)

    rows = [[0] * 14 for _ in range(14)]
    for i, pt in enumerate(pts):
        img = act(m, pt)
        j = pts.index(img)
        # b = t_j^{-1} m t_i  lies in B; entry (j, i) = chi(b)
        b = mmul(minv(rep(img)), mmul(m, rep(pt)))
        assert b[2] == 0, "not upper triangular"
        rows[j][i] = chi(b[0], b[3])
    return Mat(F4, rows)


def _chop_f2_form(mats_f4):
    """Rewrite a GF(4)-representation with rational Brauer character over GF(2).

    Restrict scalars to GF(2) (dimension doubles; the result is a direct sum
    of two copies of the GF(2)-form), then split off one copy by spinning a
    kernel vector of a singular algebra element.
    """
    F2 = make_field(2, 1)
    F4 = mats_f4[0].spec
    d = mats_f4[0].d
    D = 2 * d

    def blow(mat):  # GF(4) entry e -> 2x2 GF(2) block of mult-by-e
        big = [[0] * D for _ in range(D)]
        for i in range(d):
            for j in range(d):
                e = mat.rows[i][j]
                for t in range(2):
                    img = F4.mul(e, (1, 2)[t])  # e * basis_t, basis = (1, x)
                    c0, c1 = F4.decode(img)
                    big[2 * i][2 * j + t] = c0
                    big[2 * i + 1][2 * j + t] = c1
        return Mat(F2, big)

    big_mats = [blow(m) for m in mats_f4]
    # bitvector form: rowbits[i] has bit j set iff entry (i, j) = 1
    bit_mats = [tuple(sum(b << j for j, b in enumerate(row)) for row in m.rows)
                for m in big_mats]

    def apply_bits(bm, v):
        out = 0
        for i, row in enumerate(bm):
            out |= (bin(row & v).count("1") & 1) << i
        return out

    def echelon(vectors):
        """dict lead -> row, by repeated leading-bit elimination."""
        rows = {}
        for v in vectors:
            while v:
                lead = v.bit_length() - 1
                if lead in rows:
                    v ^= rows[lead]
                else:
                    rows[lead] = v
                    break
        return rows

    def spin(seed):
        rows = {}

        def insert(v):
            while v:
                lead = v.bit_length() - 1
                if lead in rows:
                    v ^= rows[lead]
                else:
                    rows[lead] = v
                    return v
            return 0

        frontier = [insert(seed)]
        while frontier:
            new = []
            for v in frontier:
                for bm in bit_mats:
                    w = insert(apply_bits(bm, v))
                    if w:
                        new.append(w)
            frontier = new
        return rows

    # deterministic search for a singular algebra element whose kernel meets
    # one of the proper submodules; all kernel vectors are tried because the
    # proper ones are rarely aligned with an echelon basis
    from itertools import product as iproduct

    words = [w for L in (1, 2, 3, 4)
             for w in iproduct(range(len(big_mats)), repeat=L)]
    for word in words:
        theta = Mat.identity(F2, D)
        for idx in word:
            theta = theta * big_mats[idx]
        # I + theta is singular whenever theta has eigenvalue 1
        cand = [[(theta.rows[i][j] ^ (1 if i == j else 0)) for j in range(D)]
                for i in range(D)]
        ker = _gf2_kernel_bits(cand)
        if not 1 <= len(ker) <= 6:
            continue
        for mask in range(1, 1 << len(ker)):
            kv = 0
            for b, basis_vec in enumerate(ker):
                if (mask >> b) & 1:
                    kv ^= basis_vec
            span = spin(kv)
            if len(span) == d:
                return _restrict_bits(bit_mats, span, F2)
    raise AssertionError("no proper GF(2)-form found by spinning")


def _gf2_kernel_bits(rows):
    """Kernel basis of a GF(2) matrix given as row lists, as bit integers."""
    n = len(rows)
    # transpose trick: solve v with M v = 0 by echelonizing columns-as-rows
    aug = []
    for c in range(n):
        col = sum(rows[r][c] << r for r in range(n))
        aug.append((col, 1 << c))  # (column vector, elementary tag)
    ech = {}
    kernel = []
    for col, tag in aug:
        while col:
            lead = col.bit_length() - 1
            if lead in ech:
                ecol, etag = ech[lead]
                col ^= ecol
                tag ^= etag
            else:
                ech[lead] = (col, tag)
                break
        if not col:
            kernel.append(tag)
    return kernel


def _restrict_bits(bit_mats, span_rows, F2):
    """Matrices of the action on the span (dict lead -> row), in that basis."""
    leads = sorted(span_rows, reverse=True)
    basis = [span_rows[l] for l in leads]
    m = len(basis)

    def coords(v):
        out = 0
        while v:
            lead = v.bit_length() - 1
            idx = leads.index(lead)
            v ^= span_rows[lead]
            out |= 1 << idx
        return out

    out_mats = []
    for bm in bit_mats:
        cols = []
        for b in basis:
            w = 0
            for i, row in enumerate(bm):
                w |= (bin(row & b).count("1") & 1) << i
            cols.append(coords(w))
        rows = [[(cols[j] >> i) & 1 for j in range(m)] for i in range(m)]
        out_mats.append(Mat(F2, rows))
    return out_mats


@lru_cache(maxsize=1)
def l2_13_modules_v14_gf2():
    """(L_2(13) gens, L_2(13).2 gens) acting on V_14(2)."""
    # PSL_2(13) generators: [[1,1],[0,1]] and [[0,-1],[1,0]]; PGL adds diag(2,1)
    psl_gens = [(1, 1, 0, 1), (0, 12, 1, 0)]
    pgl_extra = (2, 0, 0, 1)
    big = [_induced_rep_f4(m) for m in psl_gens + [pgl_extra]]
    f2_mats = _chop_f2_form(big)
    return f2_mats[:2], f2_mats


# ---------------------------------------------------------------------------
# L_2(13) on the deleted 14-point permutation module over GF(3)
# ---------------------------------------------------------------------------


def _projective_line_perms(p, mats):
    """Permutations of P^1(F_p) = {0..p-1, inf} induced by 2x2 matrices."""
    points = list(range(p)) + [p]  # index p plays the role of infinity
    perms = []
    for a, b, c, d in mats:
        perm = []
        for pt in points:
            if pt == p:
                num, den = a, c
            else:
                num, den = (a * pt + b) % p, (c * pt + d) % p
            perm.append(p if den == 0 else num * pow(den, p - 2, p) % p)
        perms.append(perm)
    return perms


def l2_13_on_v13_gf3():
    """L_2(13) on the 13-dimensional deleted permutation module over GF(3)."""
    perms = _projective_line_perms(13, [(1, 1, 0, 1), (0, 12, 1, 0)])
    return deleted_perm_module(3, perms)


# ---------------------------------------------------------------------------
# U_4(2) = PSp_4(3) on V_5(3): quotient of the exterior square of Sp_4(3)
# ---------------------------------------------------------------------------


def sp4_3_gens():
    """Sp_4(3) via symplectic transvections for the form e1^f1 + e2^f2."""
    F = make_field(3, 1)
    # B(x, y) = x0 y1 - x1 y0 + x2 y3 - x3 y2
    J = [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]

    def B(x, y):
        return sum(x[i] * J[i][j] * y[j] for i in range(4) for j in range(4)) % 3

    def transvection(v, lam):
        cols = []
        for i in range(4):
            e = [1 if j == i else 0 for j in range(4)]
            img = [(e[j] + lam * B(e, v) * v[j]) % 3 for j in range(4)]
            cols.append(img)
        return Mat(F, [[cols[j][i] for j in range(4)] for i in range(4)])

    gens = [transvection((1, 0, 0, 0), 1), transvection((0, 1, 0, 0), 1),
            transvection((0, 0, 1, 0), 1), transvection((1, 0, 1, 0), 1),
            transvection((0, 1, 0, 1), 1), transvection((1, 1, 1, 1), 1)]
    return gens


def _exterior_square(m):
    """Action of m on wedge^2, basis e_i ^ e_j (i < j) in lex order."""
    F = m.spec
    d = m.d
    pairs = [(i, j) for i in range(d) for j in range(i + 1, d)]
    rows = []
    for (i, j) in pairs:
        row = []
        for (k, l) in pairs:
            # coefficient of e_i^e_j in (m e_k)^(m e_l)
            val = F.sub(F.mul(m.rows[i][k], m.rows[j][l]),
                        F.mul(m.rows[j][k], m.rows[i][l]))
            row.append(val)
        rows.append(row)
    return Mat(F, rows)


@lru_cache(maxsize=1)
def u4_2_on_v5_gf3():
    """U_4(2) = PSp_4(3) acting on wedge^2(V_4) / <symplectic form>."""
    from regorb.spectral import kernel_basis

    F = make_field(3, 1)
    gens4 = sp4_3_gens()
    wedges = [_exterior_square(g) for g in gens4]
    # the invariant line: common kernel of (g - I) transposed action... the
    # fixed vector omega satisfies g.omega = omega for all generators
    stack = []
    for w in wedges:
        for i in range(6):
            row = [F.sub(w.rows[i][j], 1 if i == j else 0) for j in range(6)]
            stack.append(row)
    fixed = kernel_basis(F, stack)
    assert len(fixed) == 1, "symplectic form spans the unique fixed line"
    omega = fixed[0]
    # quotient basis: standard vectors away from omega's pivot
    pivot = next(i for i, c in enumerate(omega) if c)
    inv = F.inv(omega[pivot])
    keep = [i for i in range(6) if i != pivot]

    def project(vec):  # reduce modulo omega, drop the pivot coordinate
        c = F.mul(vec[pivot], inv)
        return [F.sub(v, F.mul(c, o)) for v, o in
                [(vec[i], omega[i]) for i in keep]]

    out = []
    for w in wedges:
        cols = []
        for i in keep:
            img = [w.rows[r][i] for r in range(6)]
            cols.append(project(img))
        out.append(Mat(F, [[cols[j][i] for j in range(5)] for i in range(5)]))
    return out

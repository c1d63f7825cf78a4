import pytest
from hypothesis import given, settings, strategies as st

from regorb.charcalc import (
    SYMPLECTIC,
    UNITARY,
    BrauerDatum,
    ExactSqrt,
    WeilContext,
    brauer_eigenvalues,
    brauer_value_from_multiplicities,
    cw_dim_menu,
    weil_emax_bound,
    weil_sp_abs_sum,
    weil_su_value,
)
from regorb.errors import DivisibilityViolation, ExcludedCase

SU11_2 = WeilContext(UNITARY, 11, 2, 3)
SP14_3 = WeilContext(SYMPLECTIC, 14, 3, 2)


# -- brauer_eigenvalues ---------------------------------------------------------

def test_brauer_41st_roots():
    # d=40, p=41, c=-1: each primitive 41st root exactly once
    assert brauer_eigenvalues(BrauerDatum(40, 41, -1)) == (0, 1)


def test_brauer_five_blocks():
    # d=40, p=5, c=0: profile (8^5)
    assert brauer_eigenvalues(BrauerDatum(40, 5, 0)) == (8, 8)


def test_brauer_identity_like():
    assert brauer_eigenvalues(BrauerDatum(6, 3, 6)) == (6, 0)


def test_brauer_divisibility_violation():
    with pytest.raises(DivisibilityViolation):
        brauer_eigenvalues(BrauerDatum(40, 41, 0))
    with pytest.raises(DivisibilityViolation):
        BrauerDatum(5, 3, 7)  # |c| > d


@settings(max_examples=200, deadline=None)
@given(d=st.integers(1, 400), p=st.sampled_from([2, 3, 5, 7, 11, 13, 41]),
       c=st.integers(-40, 40))
def test_brauer_roundtrip_and_total(d, p, c):
    if abs(c) > d:
        return
    try:
        m1, mp = brauer_eigenvalues(BrauerDatum(d, p, c))
    except DivisibilityViolation:
        return
    assert m1 >= 0 and mp >= 0
    assert m1 + (p - 1) * mp == d
    assert brauer_value_from_multiplicities(m1, mp) == c


# -- Weil character values: the SU_11(2) table ------------------------------------

# (element order, dim C_W menu, character values) for SU_11(2), all eight rows
SU11_TABLE = [
    (7, (5,), {5: 32}),
    (11, (6, 1), {1: 2, 6: -64}),
    (17, (3,), {3: 8}),
    (19, (2,), {2: -4}),
    (31, (1,), {1: 2}),
    (43, (4,), {4: -16}),
    (683, (0,), {0: -1}),
]

# eigenvalue multiplicities on the 2048-dimensional module per table row
SU11_EIGS = {
    (7, 5): (320, 288),     # (Omega^288, 1^32)
    (11, 1): (188, 186),    # (Omega^186, 1^2)
    (11, 6): (128, 192),    # (Omegabar^64, Omega^128)
    (17, 3): (128, 120),    # (Omega^120, 1^8)
    (19, 2): (104, 108),    # (Omegabar^4, Omega^104)
    (31, 1): (68, 66),      # (Omega^66, 1^2)
    (43, 4): (32, 48),      # (Omegabar^16, Omega^32)
    (683, 0): (2, 3),       # (Omegabar^1, Omega^2)
}


@pytest.mark.parametrize("order,menu,values", SU11_TABLE,
                         ids=[str(r[0]) for r in SU11_TABLE])
def test_su11_2_menu_and_values(order, menu, values):
    assert cw_dim_menu(SU11_2, order) == menu
    for cw, chi in values.items():
        assert weil_su_value(SU11_2, cw) == chi


@pytest.mark.parametrize("key", sorted(SU11_EIGS), ids=str)
def test_su11_2_eigenvalue_multiplicities(key):
    order, cw = key
    chi = weil_su_value(SU11_2, cw)
    m1, mp = brauer_eigenvalues(BrauerDatum(2048, order, chi))
    assert (m1, mp) == SU11_EIGS[key]


def test_su11_2_order5_cap_is_512():
    # dim C_W in {3, 7} gives values 8 and 128; caps 416 and 512
    assert cw_dim_menu(SU11_2, 5) == (7, 3)
    assert weil_su_value(SU11_2, 7) == 128
    assert brauer_eigenvalues(BrauerDatum(2048, 5, 128)) == (512, 384)
    assert weil_emax_bound(SU11_2, 5) == 512


def test_su11_2_order683_cap():
    assert weil_emax_bound(SU11_2, 683) == 3


def test_weil_su_identity_value():
    for n, q in [(11, 2), (4, 3), (5, 2)]:
        ctx = WeilContext(UNITARY, n, q, 7 if q != 7 else 5)
        assert weil_su_value(ctx, n) == q**n


# -- symplectic values: the Sp_14(3) table -----------------------------------------

SP14_TABLE = [
    (5, 2, 3), (5, 6, 27), (5, 10, 243),
    (7, 2, 3), (7, 8, 81),
    (11, 4, 9),
    (13, 2, 3), (13, 8, 81),
    (41, 6, 27), (61, 4, 9), (73, 2, 3),
    (547, 0, 1), (1093, 0, 1),
]


@pytest.mark.parametrize("order,cw,absval", SP14_TABLE,
                         ids=[f"{r[0]}@{r[1]}" for r in SP14_TABLE])
def test_sp14_3_abs_values(order, cw, absval):
    assert cw in cw_dim_menu(SP14_3, order)
    assert weil_sp_abs_sum(SP14_3, cw) == absval


def test_sp14_3_eigenvalue_rows():
    # spot-check two rows of the 2187-dimensional eigenvalue table
    m1, mp = brauer_eigenvalues(BrauerDatum(2187, 5, -3))
    assert (m1, mp) == (435, 438)  # (438^4, 435)
    m1, mp = brauer_eigenvalues(BrauerDatum(2187, 13, 3))
    assert (m1, mp) == (171, 168)  # (171, 168^12)


def test_sp14_3_semisimple_cap():
    # E_max(g) <= 486 for elements of order coprime to 6 (paper's bound)
    cap = max(weil_emax_bound(SP14_3, s)
              for s in (5, 7, 11, 13, 41, 61, 73, 547, 1093))
    assert cap == 486


def test_weil_sp_identity():
    ctx = WeilContext(SYMPLECTIC, 6, 3, 2)
    assert weil_sp_abs_sum(ctx, 6) == 27  # q^m at the identity


def test_weil_sp_odd_dim_symbolic():
    ctx = WeilContext(SYMPLECTIC, 6, 3, 2)
    v = weil_sp_abs_sum(ctx, 3)
    assert isinstance(v, ExactSqrt) and not v.is_integer()
    assert weil_sp_abs_sum(WeilContext(SYMPLECTIC, 6, 9, 2), 3) == 27


# -- menus -------------------------------------------------------------------------

def test_menu_excluded_case():
    # order 3 has delta(3, 2) = 2: excluded for unitary groups
    with pytest.raises(ExcludedCase):
        cw_dim_menu(SU11_2, 3)


def test_menu_rejects_defining_characteristic():
    with pytest.raises(ValueError):
        cw_dim_menu(SU11_2, 2)


def test_menu_entries_decreasing_nonnegative():
    for ctx in (SU11_2, SP14_3):
        for s in (5, 7, 11, 13):
            menu = cw_dim_menu(ctx, s)
            assert all(x >= 0 for x in menu)
            assert list(menu) == sorted(menu, reverse=True)
            assert len(set(menu)) == len(menu)


def test_weil_emax_rejects_identity_order():
    with pytest.raises(ValueError):
        cw_dim_menu(SU11_2, 1)


def test_menu_matches_enumerated_unitary_group():
    # SU_3(2) on its natural module: semisimple odd-prime-order classes land
    # in the menu (exhaustive over the enumerated group)
    from regorb.gfield import make_field
    from regorb.matgroup import Mat, enumerate_group, prime_projective_classes
    from regorb.spectral import fixed_space_dim

    F4 = make_field(2, 2)

    def conj_t(m):  # conjugate transpose with entrywise Frobenius
        return Mat(F4, [[F4.frobenius(m.rows[j][i]) for j in range(3)]
                        for i in range(3)])

    # brute scan for unitary matrices over GF(4) preserving the identity form
    import itertools
    gens = []
    ident = Mat.identity(F4, 3)
    count = 0
    for entries in itertools.product(range(4), repeat=9):
        rows = [entries[0:3], entries[3:6], entries[6:9]]
        m = Mat(F4, rows)
        try:
            if (conj_t(m) * m).is_identity():
                count += 1
                gens.append(m)
        except Exception:
            continue
    assert count == 648  # |GU_3(2)|
    G = enumerate_group(gens, cap=1000)
    assert G.order == 648
    ctx = WeilContext(UNITARY, 3, 2, 7)
    for c in prime_projective_classes(G):
        if c.proj_order in (2, 3):  # 2 = defining char; 3 = excluded delta
            continue
        rep = c.rep
        if rep.order() != c.proj_order:  # only genuine prime-order elements
            continue
        menu = cw_dim_menu(ctx, c.proj_order)
        assert fixed_space_dim(rep) in menu

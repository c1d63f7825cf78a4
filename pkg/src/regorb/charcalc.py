"""Character-level calculators for eigenvalue multiplicities.

Integer Brauer character values pin down eigenvalue multisets of prime-order
elements exactly (the primitive p-th roots of unity are linearly independent
over Z), and the Weil characters of symplectic and unitary groups evaluate
through fixed-space dimensions on the natural module.  Chaining the two gives
sound eigenspace caps on Weil modules without ever constructing them.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .errors import DivisibilityViolation, ExcludedCase, InconsistentMenuEntry
from .gfield import is_prime, mult_order_int

SYMPLECTIC = "symplectic"
UNITARY = "unitary"


# ---------------------------------------------------------------------------
# Brauer character values -> eigenvalue multisets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BrauerDatum:
    """An integer Brauer character value of a prime-order element."""

    d: int  # module dimension
    p: int  # element order (prime, coprime to the module characteristic)
    c: int  # signed integer character value

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"element order {self.p} must be prime")
        if abs(self.c) > self.d:
            raise DivisibilityViolation(
                f"|character value| {abs(self.c)} exceeds dimension {self.d}")


def brauer_eigenvalues(b: BrauerDatum) -> tuple[int, int]:
    """(multiplicity of eigenvalue 1, multiplicity of each primitive p-th root).

    For value c >= 0 the eigenvalue multiset is c extra 1's plus (d-c)/p full
    orbits of all p-th roots; for c < 0 it is |c| extra primitive-root orbits
    inside (d+|c|)/p equal blocks.  Both require the stated divisibility,
    otherwise the character value is impossible for this (d, p).
    """
    d, p, c = b.d, b.p, b.c
    if c >= 0:
        if (d - c) % p:
            raise DivisibilityViolation(
                f"p={p} does not divide d-c={d - c}")
        per_primitive = (d - c) // p
        mult_one = c + per_primitive
    else:
        cp = -c
        if (d + cp) % p:
            raise DivisibilityViolation(
                f"p={p} does not divide d+|c|={d + cp}")
        per_primitive = (d + cp) // p
        mult_one = per_primitive - cp
        if mult_one < 0:
            raise DivisibilityViolation(
                f"value {c} forces a negative multiplicity at 1")
    assert mult_one + (p - 1) * per_primitive == d
    return mult_one, per_primitive


def brauer_value_from_multiplicities(mult_one: int, per_primitive: int) -> int:
    """Inverse of brauer_eigenvalues: primitive p-th roots sum to -1."""
    return mult_one - per_primitive


# ---------------------------------------------------------------------------
# Weil character values
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WeilContext:
    """A symplectic or unitary group together with its cross characteristic.

    ``n`` is the natural-module dimension (2m for Sp_2m(q), n for SU_n(q));
    ``q`` the defining field size; ``r0`` the cross characteristic of the
    modules under consideration.
    """

    group_kind: str  # SYMPLECTIC or UNITARY
    n: int
    q: int
    r0: int

    def __post_init__(self):
        if self.group_kind not in (SYMPLECTIC, UNITARY):
            raise ValueError(f"unknown group kind {self.group_kind!r}")
        if math.gcd(self.q, self.r0) != 1:
            raise ValueError("cross characteristic must be coprime to q")
        if self.group_kind == SYMPLECTIC and self.q % 2 == 0:
            raise ValueError("symplectic Weil characters require odd q")

    @property
    def weil_degree(self) -> int:
        m = self.n // 2 if self.group_kind == SYMPLECTIC else self.n
        return self.q**m


class ExactSqrt:
    """sqrt(n) kept exact: integer when n is a perfect square."""

    __slots__ = ("radicand",)

    def __init__(self, radicand: int):
        self.radicand = radicand

    def is_integer(self) -> bool:
        return math.isqrt(self.radicand) ** 2 == self.radicand

    def integer_value(self) -> int:
        r = math.isqrt(self.radicand)
        if r * r != self.radicand:
            raise ValueError(f"sqrt({self.radicand}) is not an integer")
        return r

    def __eq__(self, other):
        if isinstance(other, ExactSqrt):
            return self.radicand == other.radicand
        if isinstance(other, int):
            return self.is_integer() and self.integer_value() == other
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, ExactSqrt):
            return self.radicand < other.radicand
        if isinstance(other, int):
            return self.radicand < other * other if other >= 0 else False
        return NotImplemented

    def __repr__(self):
        return f"sqrt({self.radicand})"


def weil_sp_abs_sum(ctx: WeilContext, dim_cw: int):
    """|chi_1(g) + chi_2(g)| for g in Sp_2m(q) with dim C_W(g) given.

    The squared absolute value is |C_W(g)| = q^dim_cw, so the result is the
    integer q^(dim_cw/2) for even dim_cw and an exact square root otherwise.
    """
    if ctx.group_kind != SYMPLECTIC:
        raise ValueError("symplectic context required")
    if not 0 <= dim_cw <= ctx.n:
        raise ValueError("fixed-space dimension out of range")
    if dim_cw % 2 == 0:
        return ctx.q ** (dim_cw // 2)
    s = ExactSqrt(ctx.q**dim_cw)
    return s.integer_value() if s.is_integer() else s


def weil_su_value(ctx: WeilContext, dim_cw: int) -> int:
    """Value (-1)^n (-q)^(dim C_W(g)) of the degree-q^n unitary Weil character."""
    if ctx.group_kind != UNITARY:
        raise ValueError("unitary context required")
    if not 0 <= dim_cw <= ctx.n:
        raise ValueError("fixed-space dimension out of range")
    return (-1) ** ctx.n * (-ctx.q) ** dim_cw


# ---------------------------------------------------------------------------
# fixed-space dimension menus for semisimple elements
# ---------------------------------------------------------------------------

def cw_dim_menu(ctx: WeilContext, element_prime: int) -> tuple[int, ...]:
    """Possible dim C_W(g) for semisimple g of odd prime order on the natural module.

    delta(r0, q) is taken to be the multiplicative order of q modulo the
    element's prime (the paper defers the definition to its source; this
    reading reproduces all of its worked menus).  The unitary case with
    order 2 is excluded by the statement.
    """
    s = element_prime
    if not is_prime(s) or s == 2:
        raise ValueError("element order must be an odd prime")
    if ctx.q % s == 0:
        raise ValueError("semisimple elements have order coprime to q")
    i = mult_order_int(ctx.q, s)
    if ctx.group_kind == UNITARY and i == 2:
        raise ExcludedCase("unitary groups with delta = 2 are excluded")
    if i % 2 == 1:
        t_num, t_den = 2, 1
    elif ctx.group_kind == UNITARY and i % 4 == 2 and i > 2:
        t_num, t_den = 1, 2
    else:
        t_num, t_den = 1, 1
    n = ctx.n
    menu = []
    j = 1
    while True:
        step = t_num * i * j
        if step % t_den:
            warnings.warn(f"non-integral menu step t*i*j = {step}/{t_den}",
                          InconsistentMenuEntry)
            j += 1
            continue
        step //= t_den
        if step > n:
            break
        menu.append(n - step)
        j += 1
    return tuple(menu)


def weil_emax_bound(ctx: WeilContext, element_prime: int,
                    d_weil: int | None = None) -> int:
    """Sound eigenspace cap on the full Weil module for order-s semisimple elements.

    Every menu entry is converted through the Weil character value and the
    Brauer eigenvalue recovery into multiplicities on the q^m- or
    q^n-dimensional module; the cap is the maximum over all admissible
    entries, so it holds whichever fixed-space dimension the element has.
    Entries whose character value is incompatible with (d, s) are discarded.
    """
    if element_prime == ctx.r0:
        raise ValueError("Brauer characters only see r0'-elements")
    d = ctx.weil_degree if d_weil is None else d_weil
    menu = cw_dim_menu(ctx, element_prime)
    best = None
    for dim_cw in menu:
        if ctx.group_kind == UNITARY:
            values = [weil_su_value(ctx, dim_cw)]
        else:
            v = weil_sp_abs_sum(ctx, dim_cw)
            if isinstance(v, ExactSqrt):
                warnings.warn(
                    f"dim C_W = {dim_cw} gives irrational |character|; dropped",
                    InconsistentMenuEntry)
                continue
            values = [v, -v] if v else [0]
        for c in values:
            try:
                mult_one, per_prim = brauer_eigenvalues(
                    BrauerDatum(d, element_prime, c))
            except DivisibilityViolation as exc:
                warnings.warn(f"menu entry dim C_W = {dim_cw}, value {c}: {exc}",
                              InconsistentMenuEntry)
                continue
            cap = max(mult_one, per_prim)
            best = cap if best is None else max(best, cap)
    if best is None:
        raise DivisibilityViolation(
            f"no menu entry admits an eigenvalue multiset for order {element_prime}")
    return best

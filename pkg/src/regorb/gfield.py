"""Exact arithmetic in GF(p^k), polynomial factorization, integer utilities.

Field elements are encoded as integers in [0, p^k): the element with
coordinates (a_0, ..., a_{k-1}) in the power basis of the defining polynomial
is encoded as sum(a_i * p^i).  All arithmetic is exact residue arithmetic;
there is no floating point anywhere in this module.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .errors import (
    NonPrimeModulus,
    NotInvertible,
    ReduciblePolynomial,
    ZeroPolynomial,
)

_TABLE_LIMIT = 1024  # build full multiplication tables below this field size


# ---------------------------------------------------------------------------
# integer utilities
# ---------------------------------------------------------------------------

def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3.3 * 10^24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (adequate below ~2^40)."""
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def p_part_split(n: int, p: int) -> tuple[int, int]:
    """Split n = p_part * p_prime_part with p_part a power of p, p coprime to the rest."""
    if n < 1:
        raise ValueError("n must be positive")
    if not is_prime(p):
        raise NonPrimeModulus(f"{p} is not prime")
    part = 1
    while n % p == 0:
        n //= p
        part *= p
    return part, n


def mult_order_int(a: int, m: int) -> int:
    """Least t >= 1 with a^t = 1 (mod m)."""
    import math

    a %= m
    if m <= 1 or math.gcd(a, m) != 1:
        raise NotInvertible(f"{a} is not a unit mod {m}")
    t, x = 1, a
    while x != 1:
        x = x * a % m
        t += 1
    return t


def iroot_ceil(n: int, k: int) -> int:
    """Least integer r with r^k >= n, for n >= 0."""
    if n <= 1:
        return n
    r = round(n ** (1.0 / k))
    while r**k >= n:
        r -= 1
    while r**k < n:
        r += 1
    return r


# ---------------------------------------------------------------------------
# polynomials over Z_p (plain coefficient lists; used for bootstrap checks)
# ---------------------------------------------------------------------------

def _zp_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _zp_mulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # reduce mod monic f
    df = len(f) - 1
    for i in range(len(prod) - 1, df - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for j in range(df):
                prod[i - df + j] = (prod[i - df + j] - c * f[j]) % p
    return _zp_trim(prod[:df])


def _zp_powmod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = list(a)
    while e:
        if e & 1:
            result = _zp_mulmod(result, base, f, p)
        base = _zp_mulmod(base, base, f, p)
        e >>= 1
    return result


def _zp_mod(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a modulo b (b nonzero, any leading coefficient)."""
    r = _zp_trim(list(a))
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    while len(r) - 1 >= db:
        c = r[-1] * inv % p
        off = len(r) - 1 - db
        for j, bj in enumerate(b):
            r[off + j] = (r[off + j] - c * bj) % p
        _zp_trim(r)
        if not r:
            break
    return r


def _zp_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
           for i in range(n)]
    return _zp_trim(out)


def _zp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _zp_trim(list(a)), _zp_trim(list(b))
    while b:
        a, b = b, _zp_mod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _zp_is_irreducible(coeffs: list[int], p: int) -> bool:
    """Rabin test for a monic polynomial given by its full coefficient list."""
    f = list(coeffs)
    n = len(f) - 1
    if n < 1 or f[-1] != 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    xp = x
    for _ in range(n):
        xp = _zp_powmod(xp, p, f, p)
    if _zp_sub(xp, x, p):  # x^(p^n) != x mod f
        return False
    for t in factorize(n):
        xq = x
        for _ in range(n // t):
            xq = _zp_powmod(xq, p, f, p)
        if _zp_gcd(_zp_sub(xq, x, p), f, p) != [1]:
            return False
    return True


def least_primitive_root(p: int) -> int:
    """Smallest primitive root modulo the prime p."""
    if p == 2:
        return 1
    fac = factorize(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // t, p) != 1 for t in fac):
            return g
    raise AssertionError("unreachable for prime p")


# ---------------------------------------------------------------------------
# field specification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    """GF(p^k) with an explicit monic defining polynomial.

    ``defpoly`` stores the k non-leading coefficients in ascending degree, so
    the modulus is x^k + defpoly[k-1]*x^(k-1) + ... + defpoly[0].
    """

    p: int
    k: int
    defpoly: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise NonPrimeModulus(f"{self.p} is not prime")
        if self.k < 1:
            raise ValueError("extension degree must be >= 1")
        if len(self.defpoly) != self.k:
            raise ValueError("defpoly must list exactly k non-leading coefficients")
        if any(not 0 <= c < self.p for c in self.defpoly):
            raise ValueError("defpoly coefficients must be residues mod p")
        full = list(self.defpoly) + [1]
        if not _zp_is_irreducible(full, self.p):
            raise ReduciblePolynomial(
                f"x^{self.k} + {list(self.defpoly)} is reducible over GF({self.p})")

    # -- encoding ----------------------------------------------------------

    @property
    def q(self) -> int:
        return self.p**self.k

    def encode(self, coeffs) -> int:
        e = 0
        for c in reversed(list(coeffs)):
            e = e * self.p + c % self.p
        return e

    def decode(self, e: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            e, r = divmod(e, self.p)
            out.append(r)
        return tuple(out)

    def element(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FieldElement(self, self.decode(value % self.q if self.k == 1 else value))
        return FieldElement(self, tuple(c % self.p for c in value))

    def elements(self):
        """All field elements in ascending encoded order."""
        return (FieldElement(self, self.decode(e)) for e in range(self.q))

    # -- scalar arithmetic on encoded integers ------------------------------

    def add(self, a: int, b: int) -> int:
        return _ops(self).add(a, b)

    def sub(self, a: int, b: int) -> int:
        return _ops(self).sub(a, b)

    def neg(self, a: int) -> int:
        return _ops(self).neg(a)

    def mul(self, a: int, b: int) -> int:
        return _ops(self).mul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise NotInvertible("0 has no inverse")
        return _ops(self).inv(a)

    def pow(self, a: int, e: int) -> int:
        ops = _ops(self)
        if e < 0:
            a, e = ops.inv(a), -e
        result, base = 1, a
        while e:
            if e & 1:
                result = ops.mul(result, base)
            base = ops.mul(base, base)
            e >>= 1
        return result

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def element_order(self, a: int) -> int:
        """Multiplicative order of a nonzero encoded element."""
        if a == 0:
            raise NotInvertible("0 has no multiplicative order")
        t = self.q - 1
        for prime in factorize(t):
            while t % prime == 0 and self.pow(a, t // prime) == 1:
                t //= prime
        return t

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"


class _FieldOps:
    """Cached low-level arithmetic for one FieldSpec."""

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        p, k, q = spec.p, spec.k, spec.q
        self.p, self.k, self.q = p, k, q
        if k == 1:
            self.add = lambda a, b: (a + b) % p
            self.sub = lambda a, b: (a - b) % p
            self.neg = lambda a: (-a) % p
            self.mul = lambda a, b: a * b % p
            self.inv = lambda a: pow(a, p - 2, p)
            return
        if p == 2:
            self._mask = (1 << k) - 1
            self._modbits = spec.encode(spec.defpoly) | (1 << k)
            self.add = self.sub = lambda a, b: a ^ b
            self.neg = lambda a: a
            self.mul = self._mul2
            self.inv = lambda a: self._pow(a, q - 2)
        else:
            self.add = self._add_digits
            self.sub = self._sub_digits
            self.neg = self._neg_digits
            self.mul = self._mul_digits
            self.inv = lambda a: self._pow(a, q - 2)
        if q <= _TABLE_LIMIT:
            mul = self.mul
            add = self.add
            self._mul_table = [[mul(a, b) for b in range(q)] for a in range(q)]
            self._add_table = [[add(a, b) for b in range(q)] for a in range(q)]
            self.mul = lambda a, b: self._mul_table[a][b]
            self.add = lambda a, b: self._add_table[a][b]
            inv_list = [0] * q
            for a in range(1, q):
                inv_list[a] = self._pow_raw(a, q - 2)
            self._inv_table = inv_list
            self.inv = lambda a: self._inv_table[a]

    def _pow_raw(self, a, e):
        result, base = 1, a
        mul = self._mul2 if self.p == 2 else self._mul_digits
        while e:
            if e & 1:
                result = mul(result, base)
            base = mul(base, base)
            e >>= 1
        return result

    def _pow(self, a, e):
        return self._pow_raw(a, e)

    def _mul2(self, a, b):
        acc = 0
        x = a
        while b:
            if b & 1:
                acc ^= x
            x <<= 1
            b >>= 1
        # reduce modulo the defining polynomial
        mod, k = self._modbits, self.k
        top = acc.bit_length() - 1
        while top >= k:
            acc ^= mod << (top - k)
            top = acc.bit_length() - 1
        return acc

    def _digits(self, a):
        p, k = self.p, self.k
        out = []
        for _ in range(k):
            a, r = divmod(a, p)
            out.append(r)
        return out

    def _enc(self, digits):
        e = 0
        for c in reversed(digits):
            e = e * self.p + c
        return e

    def _add_digits(self, a, b):
        da, db = self._digits(a), self._digits(b)
        return self._enc([(x + y) % self.p for x, y in zip(da, db)])

    def _sub_digits(self, a, b):
        da, db = self._digits(a), self._digits(b)
        return self._enc([(x - y) % self.p for x, y in zip(da, db)])

    def _neg_digits(self, a):
        return self._enc([(-x) % self.p for x in self._digits(a)])

    def _mul_digits(self, a, b):
        p, k = self.p, self.k
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        f = self.spec.defpoly
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(k):
                    prod[i - k + j] = (prod[i - k + j] - c * f[j]) % p
        return self._enc(prod[:k])


@lru_cache(maxsize=None)
def _ops(spec: FieldSpec) -> _FieldOps:
    return _FieldOps(spec)


# ---------------------------------------------------------------------------
# field elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldElement:
    """One element of a FieldSpec, stored by its power-basis coordinates."""

    spec: FieldSpec
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.spec.k:
            raise ValueError("coordinate vector has wrong length")
        if any(not 0 <= c < self.spec.p for c in self.coeffs):
            raise ValueError("coordinates must be residues in [0, p)")

    @property
    def encoded(self) -> int:
        return self.spec.encode(self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _lift(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise ValueError("elements from different fields")
            return other.encoded
        return self.spec.element(other).encoded

    def __add__(self, other):
        return self.spec.element(self.spec.add(self.encoded, self._lift(other)))

    def __sub__(self, other):
        return self.spec.element(self.spec.sub(self.encoded, self._lift(other)))

    def __neg__(self):
        return self.spec.element(self.spec.neg(self.encoded))

    def __mul__(self, other):
        return self.spec.element(self.spec.mul(self.encoded, self._lift(other)))

    def __truediv__(self, other):
        return self.spec.element(
            self.spec.mul(self.encoded, self.spec.inv(self._lift(other))))

    def __pow__(self, e: int):
        return self.spec.element(self.spec.pow(self.encoded, e))

    def inverse(self):
        return self.spec.element(self.spec.inv(self.encoded))

    def multiplicative_order(self) -> int:
        if self.is_zero():
            raise NotInvertible("0 has no multiplicative order")
        return self.spec.element_order(self.encoded)

    def __repr__(self):
        return f"{self.spec}:{self.encoded}"


def mult_order(a, m: int | None = None) -> int:
    """Least t >= 1 with a^t = 1; accepts a FieldElement or an integer mod m."""
    if isinstance(a, FieldElement):
        return a.multiplicative_order()
    if m is None:
        raise ValueError("integer argument requires a modulus")
    return mult_order_int(a, m)


# ---------------------------------------------------------------------------
# polynomials over a FieldSpec
# ---------------------------------------------------------------------------

class Poly:
    """Polynomial over a FieldSpec; coefficients encoded, ascending degree."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.spec = spec
        self.coeffs = tuple(cs)

    @classmethod
    def from_ints(cls, spec, ints):
        return cls(spec, [c % spec.q if spec.k == 1 else c for c in ints])

    @classmethod
    def x_pow(cls, spec, n, scale=1):
        return cls(spec, [0] * n + [scale])

    @classmethod
    def one(cls, spec):
        return cls(spec, [1])

    @classmethod
    def zero(cls, spec):
        return cls(spec, [])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.spec == other.spec
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.spec, self.coeffs))

    def __add__(self, other):
        ops = _ops(self.spec)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = ops.add(out[i], c)
        return Poly(self.spec, out)

    def __sub__(self, other):
        ops = _ops(self.spec)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        for i in range(n):
            b = other.coeffs[i] if i < len(other.coeffs) else 0
            a[i] = ops.sub(a[i], b)
        return Poly(self.spec, a)

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.spec)
        ops = _ops(self.spec)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = ops.add(out[i + j], ops.mul(a, b))
        return Poly(self.spec, out)

    def scale(self, c: int):
        ops = _ops(self.spec)
        return Poly(self.spec, [ops.mul(c, a) for a in self.coeffs])

    def monic(self):
        if self.is_zero() or self.is_monic():
            return self
        return self.scale(_ops(self.spec).inv(self.coeffs[-1]))

    def divmod(self, other: "Poly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        ops = _ops(self.spec)
        rem = list(self.coeffs)
        dq = len(other.coeffs) - 1
        lead_inv = ops.inv(other.coeffs[-1])
        quo = [0] * max(0, len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if c:
                f = ops.mul(c, lead_inv)
                quo[i - dq] = f
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] = ops.sub(rem[i - dq + j], ops.mul(f, b))
        return Poly(self.spec, quo), Poly(self.spec, rem[:dq])

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def powmod(self, e: int, mod: "Poly") -> "Poly":
        result = Poly.one(self.spec)
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return result

    def evaluate(self, x: int) -> int:
        ops = _ops(self.spec)
        acc = 0
        for c in reversed(self.coeffs):
            acc = ops.add(ops.mul(acc, x), c)
        return acc

    def derivative(self) -> "Poly":
        ops = _ops(self.spec)
        p = self.spec.p
        out = []
        for i, c in enumerate(self.coeffs[1:], start=1):
            m = i % p
            acc = 0
            for _ in range(m):
                acc = ops.add(acc, c)
            out.append(acc)
        return Poly(self.spec, out)

    def map_coeffs(self, fn, target_spec=None) -> "Poly":
        return Poly(target_spec or self.spec, [fn(c) for c in self.coeffs])

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                if i == 0:
                    terms.append(str(c))
                elif i == 1:
                    terms.append(f"{c}*x" if c != 1 else "x")
                else:
                    terms.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return "Poly(" + " + ".join(terms) + f") over {self.spec}"


# ---------------------------------------------------------------------------
# polynomial factorization
# ---------------------------------------------------------------------------

def _squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """(g, m) pairs with f = prod g^m up to a unit, each g squarefree."""
    spec = f.spec
    out: list[tuple[Poly, int]] = []
    f = f.monic()

    def rec(g: Poly, mult: int):
        if g.degree < 1:
            return
        d = g.derivative()
        if d.is_zero():
            # g = h(x^p); take p-th root coefficientwise
            p = spec.p
            root = [spec.pow(c, spec.q // p) if spec.k > 1 else c
                    for c in g.coeffs[::p]]
            rec(Poly(spec, root), mult * p)
            return
        c = g.gcd(d)
        w = (g // c).monic()
        m = mult
        while w.degree >= 1:
            y = w.gcd(c)
            z = (w // y).monic()
            if z.degree >= 1:
                out.append((z, m))
            w = y
            c = (c // y).monic()
            m += mult
        if c.degree >= 1:
            rec(c, mult)

    rec(f, 1)
    return out


def _distinct_degree(f: Poly) -> list[tuple[Poly, int]]:
    """Split a squarefree monic f into (product of degree-e irreducibles, e)."""
    spec = f.spec
    out = []
    x = Poly(spec, [0, 1])
    h = x
    g = f
    e = 0
    while g.degree > 0:
        e += 1
        if 2 * e > g.degree:
            out.append((g, g.degree))
            break
        h = h.powmod(spec.q, g)
        d = g.gcd(h - x)
        if d.degree > 0:
            out.append((d, e))
            g = (g // d).monic()
            h = h % g
    return out


def _poly_from_counter(spec: FieldSpec, counter: int, max_deg: int) -> Poly:
    """Deterministic enumeration of candidate splitting polynomials."""
    coeffs = []
    c = counter
    while c:
        c, r = divmod(c, spec.q)
        coeffs.append(r)
    coeffs = coeffs[: max_deg + 1]
    return Poly(spec, coeffs)


def _equal_degree_split(f: Poly, e: int) -> list[Poly]:
    """Split a monic squarefree product of degree-e irreducibles."""
    spec = f.spec
    if f.degree == e:
        return [f]
    n_factors = f.degree // e
    work = [f]
    done: list[Poly] = []
    counter = 1
    exp = (spec.q**e - 1) // 2 if spec.p != 2 else None
    while work:
        g = work.pop()
        if g.degree == e:
            done.append(g)
            continue
        split = None
        while split is None:
            w = _poly_from_counter(spec, counter, 2 * e - 1)
            counter += 1
            if w.degree < 1:
                continue
            if spec.p == 2:
                # trace map over GF(2): T(w) = w + w^2 + ... + w^(2^(ek-1))
                acc = w % g
                t = acc
                for _ in range(e * spec.k - 1):
                    t = (t * t) % g
                    acc = acc + t
                cand = g.gcd(acc)
            else:
                cand = g.gcd(w.powmod(exp, g) - Poly.one(spec))
            if 0 < cand.degree < g.degree:
                split = cand
        work.append(split.monic())
        work.append((g // split).monic())
    assert len(done) == n_factors
    return done


def factor_poly(f: Poly) -> list[tuple[Poly, int]]:
    """Factor f into irreducibles; deterministic (degree, then coefficient) order.

    Returns (factor, multiplicity) pairs whose product, scaled by the leading
    unit of f, reproduces f exactly.
    """
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    if f.degree == 0:
        return []
    factors: dict[Poly, int] = {}
    for g, mult in _squarefree_decomposition(f):
        for h, e in _distinct_degree(g):
            for irr in _equal_degree_split(h, e):
                factors[irr] = factors.get(irr, 0) + mult
    out = sorted(factors.items(), key=lambda t: (t[0].degree, t[0].coeffs))
    return out


def is_irreducible(f: Poly) -> bool:
    if f.is_zero() or f.degree < 1:
        return False
    fac = factor_poly(f)
    return len(fac) == 1 and fac[0][1] == 1


def roots(f: Poly) -> list[int]:
    """Encoded roots of f in its own coefficient field, ascending."""
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial has every root")
    if f.spec.q <= 1 << 16:
        return [x for x in range(f.spec.q) if f.evaluate(x) == 0]
    out = []
    for g, _ in factor_poly(f):
        if g.degree == 1:
            out.append(f.spec.neg(g.coeffs[0]))
    return sorted(out)


# ---------------------------------------------------------------------------
# defining polynomials: bundled Conway table, deterministic fallback
# ---------------------------------------------------------------------------

_ENV_VAR = "REGORB_FIELD_DB"


@lru_cache(maxsize=None)
def _load_conway_table(path: str | None) -> dict[tuple[int, int], tuple[int, ...]]:
    table: dict[tuple[int, int], tuple[int, ...]] = {}
    if path is not None:
        with open(path, encoding="ascii") as fh:
            text = fh.read()
    else:
        text = (resources.files("regorb") / "data" / "conway.txt").read_text("ascii")
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = [int(t) for t in line.split()]
        p, k, coeffs = parts[0], parts[1], tuple(parts[2:])
        if len(coeffs) != k:
            raise ValueError(f"bad conway table row for p={p} k={k}")
        table[(p, k)] = coeffs
    return table


def conway_polynomial(p: int, k: int, db_path: str | None = None) -> tuple[int, ...] | None:
    """Bundled Conway polynomial coefficients for GF(p^k), or None if absent."""
    if k == 1:
        return ((p - least_primitive_root(p)) % p,)
    path = db_path or os.environ.get(_ENV_VAR) or None
    return _load_conway_table(path).get((p, k))


def _lex_least_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Deterministic fallback: least encoded coefficient vector, monic irreducible."""
    limit = p**k
    for enc in range(limit):
        coeffs = []
        e = enc
        for _ in range(k):
            e, r = divmod(e, p)
            coeffs.append(r)
        if _zp_is_irreducible(coeffs + [1], p):
            return tuple(coeffs)
    raise AssertionError("irreducible polynomials exist for every degree")


def make_field(p: int, k: int, defpoly=None, db_path: str | None = None) -> FieldSpec:
    """Construct a validated GF(p^k) specification.

    With no explicit ``defpoly`` the bundled Conway polynomial is used when
    available, otherwise the least monic irreducible in encoded-coefficient
    order; both choices are deterministic across runs.
    """
    if not is_prime(p):
        raise NonPrimeModulus(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    if defpoly is None:
        coeffs = conway_polynomial(p, k, db_path)
        if coeffs is None:
            coeffs = _lex_least_irreducible(p, k)
        return FieldSpec(p, k, coeffs)
    cs = list(defpoly)
    if len(cs) == k + 1:
        if cs[-1] != 1:
            raise ValueError("defining polynomial must be monic")
        cs = cs[:-1]
    if len(cs) != k:
        raise ValueError("defpoly must have degree k")
    return FieldSpec(p, k, tuple(c % p for c in cs))


# ---------------------------------------------------------------------------
# subfield embeddings
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _embedding_generator_image(src: FieldSpec, dst: FieldSpec) -> int:
    if src.p != dst.p or dst.k % src.k != 0:
        raise ValueError(f"no embedding {src} -> {dst}")
    if src == dst:
        return src.p  # the generator itself (encoding of x)
    ops = _ops(dst)
    defpoly = Poly(dst, [c for c in src.defpoly] + [1])
    # src coefficients are prime-field residues, valid in dst's encoding as-is
    rs = roots(defpoly)
    if not rs:
        raise AssertionError("defining polynomial must split in the extension")
    return rs[0]


def embed(x: FieldElement, dst: FieldSpec) -> FieldElement:
    """Image of x under the canonical embedding into the larger field dst.

    The generator of the source field is sent to the least root (in encoded
    order) of the source defining polynomial inside dst.
    """
    src = x.spec
    if src == dst:
        return x
    beta = _embedding_generator_image(src, dst)
    acc = 0
    for c in reversed(x.coeffs):
        acc = dst.add(dst.mul(acc, beta), c)
    return dst.element(acc)


def embed_encoded(e: int, src: FieldSpec, dst: FieldSpec) -> int:
    if src == dst:
        return e
    beta = _embedding_generator_image(src, dst)
    acc = 0
    for c in reversed(src.decode(e)):
        acc = dst.add(dst.mul(acc, beta), c)
    return acc

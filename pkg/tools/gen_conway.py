#!/usr/bin/env python3
"""Generate the bundled Conway polynomial table for all p^k <= 2^16, k >= 2.

A Conway polynomial C_{p,k} is the minimal monic primitive polynomial of
degree k over GF(p), under the word ordering that identifies
x^k - c_{k-1} x^{k-1} + c_{k-2} x^{k-2} - ... with the tuple
(c_{k-1}, ..., c_0), subject to the norm-compatibility condition
C_{p,m}(x^((p^k-1)/(p^m-1))) = 0 (mod C_{p,k}) for every maximal proper
divisor m of k.  Degree-1 entries are x - g with g the least primitive root
and are computed on the fly by the library, so only k >= 2 rows are stored.

Output format (one line per field): p k c0 c1 ... c_{k-1}
where c_i are the non-leading coefficients in ascending degree.
"""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from regorb.gfield import (  # noqa: E402
    _zp_is_irreducible,
    _zp_powmod,
    _zp_sub,
    factorize,
    least_primitive_root,
)

LIMIT = 1 << 16


def is_primitive(f, p, k):
    """f monic irreducible of degree k: does x generate GF(p^k)^x mod f?"""
    order = p**k - 1
    x = [0, 1]
    for t in factorize(order):
        if not _zp_sub(_zp_powmod(x, order // t, f, p), [1], p):
            return False
    return True


def compatible(f, p, k, table):
    """Norm compatibility with the Conway polynomials of maximal subfields."""
    from regorb.gfield import _zp_mulmod, _zp_trim

    for t in factorize(k):
        m = k // t
        if m == 1:
            sub = [(p - least_primitive_root(p)) % p, 1]
        else:
            sub = list(table[(p, m)]) + [1]
        power = (p**k - 1) // (p**m - 1)
        xn = _zp_powmod([0, 1], power, f, p)
        acc = []
        for c in reversed(sub):  # Horner: acc = acc * xn + c  (mod f)
            acc = _zp_mulmod(acc, xn, f, p) if acc else []
            if c:
                acc = acc or [0]
                acc[0] = (acc[0] + c) % p
                acc = _zp_trim(acc)
        if acc:
            return False
    return True


def candidates(p, k):
    """Candidate polynomials in Conway word order."""
    total = p**k
    for word in range(total):
        digits = []
        w = word
        for _ in range(k):
            w, r = divmod(w, p)
            digits.append(r)
        # digits = (c_0, ..., c_{k-1}) read off the word with c_{k-1} major
        digits.reverse()  # now c_{k-1} first ... c_0 last? we want major first
        # word order: c_{k-1} is the most significant digit
        cs = digits  # cs[0] = c_{k-1}, ..., cs[-1] = c_0
        coeffs = [0] * (k + 1)
        coeffs[k] = 1
        for i in range(k):
            c = cs[k - 1 - i]  # c_i
            coeffs[i] = (pow(-1, k - i, p) * c) % p
        yield coeffs


def conway(p, k, table):
    for f in candidates(p, k):
        if f[0] == 0:
            continue
        if not _zp_is_irreducible(f, p):
            continue
        if not is_primitive(f, p, k):
            continue
        if not compatible(f, p, k, table):
            continue
        return tuple(f[:k])
    raise AssertionError(f"no Conway polynomial found for p={p} k={k}")


def main():
    out_path = Path(__file__).resolve().parent.parent / "src" / "regorb" / "data" / "conway.txt"
    primes = [n for n in range(2, 256) if _is_prime(n)]
    table = {}
    jobs = []
    for p in primes:
        k = 2
        while p**k <= LIMIT:
            jobs.append((p, k))
            k += 1
    jobs.sort(key=lambda t: (t[1], t[0]))  # low degrees first: subfields ready
    lines = ["# Conway polynomials: p k c0 c1 ... c_{k-1} (non-leading, ascending)"]
    t0 = time.time()
    for p, k in jobs:
        coeffs = conway(p, k, table)
        table[(p, k)] = coeffs
        lines.append(" ".join(str(v) for v in (p, k) + coeffs))
        print(f"C({p},{k}) = {coeffs}  [{time.time() - t0:.1f}s]")
    lines.sort(key=_row_key)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_text("\n".join(lines) + "\n", encoding="ascii")
    print(f"wrote {len(lines) - 1} rows to {out_path}")


def _row_key(line):
    if line.startswith("#"):
        return (0, 0)
    p, k = line.split()[:2]
    return (int(p), int(k))


def _is_prime(n):
    return all(n % d for d in range(2, int(n**0.5) + 1)) and n >= 2


if __name__ == "__main__":
    main()

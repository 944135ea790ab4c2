"""Integer factorization: trial division, then Brent's rho, desk scale.

The k-th-power-free class map needs full factorizations of twist values.
Values met in practice are either smooth (powers of small parameter
denominators) or of modest size, so trial division followed by rho with a
hard per-cofactor bit bound is the right tool.  The bound (default 96 bits,
overridable via the KF_FACTOR_BITS environment variable or per call) is
enforced BEFORE any rho work, so an oversized cofactor fails fast instead of
spinning.

Primality: Miller-Rabin with the witness set {2,...,37}, which is proven
deterministic for n < 3.317e24 (more than the default bound admits); above
that an extended fixed witness set is used, which is heuristic but only
reachable when the caller raises the bound.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import gcd, isqrt

from .errors import FactorizationBoundError, InputError

DEFAULT_FACTOR_BITS = 96

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_BELOW = 3_317_044_064_679_887_385_961_981
_MR_EXTRA = (41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)

_TRIAL_LIMIT = 100_000


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [i for i, f in enumerate(flags) if f]

_SMALL_PRIMES = _sieve(_TRIAL_LIMIT)


def factor_bit_bound(override: int | None = None) -> int:
    if override is not None:
        return override
    env = os.environ.get("KF_FACTOR_BITS")
    return int(env) if env else DEFAULT_FACTOR_BITS


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    witnesses = _MR_WITNESSES
    if n >= _MR_DETERMINISTIC_BELOW:
        witnesses = _MR_WITNESSES + _MR_EXTRA
    for a in witnesses:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    """A nontrivial factor of composite odd n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    for c in range(1, 50):
        y, m = 2, 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise FactorizationBoundError(n, n.bit_length())  # rho exhausted; treat as too hard


def factorize(n: int, bit_bound: int | None = None) -> dict[int, int]:
    """Full factorization of n >= 1 as {prime: exponent}.

    Raises FactorizationBoundError when a composite cofactor exceeds the bit
    bound; callers treat that as a per-candidate skip, never a wrong answer.
    """
    if n < 1:
        raise InputError("factorize expects a positive integer")
    bound = factor_bit_bound(bit_bound)
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n == 1:
        return out
    stack = [n]
    while stack:
        m = stack.pop()
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        if m.bit_length() > bound:
            raise FactorizationBoundError(m, bound)
        d = _brent_rho(m)
        stack.extend((d, m // d))
    return dict(sorted(out.items()))


def factor_rational(q: Fraction, bit_bound: int | None = None):
    """(sign, {prime: exponent}) with negative exponents from the denominator."""
    if q == 0:
        raise InputError("cannot factor zero")
    sgn = 1 if q > 0 else -1
    fac = factorize(abs(q.numerator), bit_bound)
    for p, e in factorize(q.denominator, bit_bound).items():
        fac[p] = fac.get(p, 0) - e
    return sgn, {p: e for p, e in sorted(fac.items()) if e}

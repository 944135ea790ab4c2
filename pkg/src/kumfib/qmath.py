"""Exact rational helpers shared across the package.

`Rat` is stdlib fractions.Fraction: it already maintains the canonical form
(reduced, positive denominator, 0/1 for zero) required of every rational in
the toolkit.  This module adds the serialization format ("p/q" or "n"),
interval evaluation, and the small-denominator rational search used when
sampling between isolated roots.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import InputError

Rat = Fraction


def rat_str(q: Fraction) -> str:
    """Serialize a rational as "p/q", or "n" when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rat(s) -> Fraction:
    """Parse "p/q" or "n" (also accepts ints and Fractions passed through)."""
    if isinstance(s, Fraction):
        return s
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise InputError(f"cannot parse rational from {s!r}")
    t = s.strip()
    try:
        if "/" in t:
            num, den = t.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(t))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"cannot parse rational from {s!r}") from exc


def simplest_rational_in(lo: Fraction, hi: Fraction) -> Fraction:
    """Smallest-denominator rational in the closed interval [lo, hi].

    Stern-Brocot descent; among equal denominators the numerator closest to
    zero wins.  Used to keep Sturm inputs small when sampling between
    isolated roots.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        raise InputError("empty interval")
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_rational_in(-hi, -lo)

    # 0 < lo <= hi: walk the continued-fraction expansion.
    def rec(a: Fraction, b: Fraction) -> Fraction:
        fa = a.numerator // a.denominator
        if fa + 1 <= b:
            # an integer lies in [a, b]
            return Fraction(fa if fa >= a else fa + 1)
        # same integer part; recurse on the fractional parts, inverted
        frac_a = a - fa
        frac_b = b - fa
        if frac_a == 0:
            return Fraction(fa)
        return fa + 1 / rec(1 / frac_b, 1 / frac_a)

    return rec(lo, hi)


def interval_eval(coeffs: Sequence[Fraction], lo: Fraction, hi: Fraction):
    """Enclosure of {p(x) : x in [lo, hi]} by interval Horner.

    coeffs are dense, low degree first.  The enclosure is exact-rational and
    valid (it may overestimate, but converges as the box shrinks), which is
    all the algebraic-number comparisons need.
    """
    alo = ahi = Fraction(0)
    for c in reversed(list(coeffs)):
        # [alo, ahi] * [lo, hi]
        prods = (alo * lo, alo * hi, ahi * lo, ahi * hi)
        alo, ahi = min(prods) + c, max(prods) + c
    return alo, ahi


def sign(x) -> int:
    return (x > 0) - (x < 0)


def int_kth_root(n: int, k: int) -> tuple[int, bool]:
    """Floor k-th root of n >= 0 and whether n is a perfect k-th power."""
    if n < 0 or k < 1:
        raise InputError("int_kth_root needs n >= 0 and k >= 1")
    if n in (0, 1) or k == 1:
        return n, True
    r = 1 << (-(-n.bit_length() // k))  # upper bound
    while True:
        nr = ((k - 1) * r + n // r ** (k - 1)) // k
        if nr >= r:
            break
        r = nr
    return r, r ** k == n


def perfect_kth_root(q: Fraction, k: int) -> Fraction | None:
    """The exact rational k-th root of q > 0, when it exists."""
    q = Fraction(q)
    if q <= 0:
        return None
    rn, okn = int_kth_root(q.numerator, k)
    if not okn:
        return None
    rd, okd = int_kth_root(q.denominator, k)
    return Fraction(rn, rd) if okd else None

"""Canonical k-th-power-free classes and simultaneous twist witnesses.

A nonzero rational determines a class in Q*/(Q*)^k, represented canonically
by a sign (absorbed into the class when k is odd, since -1 = (-1)^k) and a
sorted list of prime exponents reduced into [1, k-1].  Distinctness of
classes is decided by comparing these canonical forms, so every claim of
"pairwise distinct twists" is backed by explicit factorizations.

The witness generator walks u = p/q in increasing height and emits, for
each new class, verified rational points on BOTH twisted curves

    l y1^k = x^n + a x + b      and      l y2^k = t^n + c t + d

with l = f(t(u)): the surface identity f(t(u)) y(u)^k = g(x(u)) hands us
point1 = (x(u), y(u)) and point2 = (t(u), 1) for free, and both equations
are re-checked by exact substitution before the witness is emitted.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import FactorizationBoundError, InputError, PoleError
from .factorint import factor_rational
from .families import GENERAL, ParamFamily, eval_family
from .qmath import Rat, rat_str
from .surfaces import QuotientSurface

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class KthPowerFreeClass:
    """Canonical representative of a class in Q*/(Q*)^k."""

    k: int
    sign: int  # +1 always when k is odd
    factors: tuple[tuple[int, int], ...]  # sorted (prime, exponent), 1 <= e <= k-1

    def __post_init__(self):
        if self.k < 2:
            raise InputError("classes need k >= 2")
        if self.sign not in (1, -1) or (self.k % 2 == 1 and self.sign == -1):
            raise InputError("invalid sign for this k")
        for p, e in self.factors:
            if not (1 <= e <= self.k - 1):
                raise InputError("exponents must lie in [1, k-1]")

    @property
    def is_trivial(self) -> bool:
        return self.sign == 1 and not self.factors

    def representative(self) -> Fraction:
        out = Fraction(self.sign)
        for p, e in self.factors:
            out *= Fraction(p) ** e
        return out

    def __str__(self):
        if self.is_trivial:
            return f"[1] mod {self.k}-th powers"
        parts = ([] if self.sign > 0 else ["-1"]) + [
            (f"{p}^{e}" if e > 1 else str(p)) for p, e in self.factors
        ]
        return f"[{'*'.join(parts)}] mod {self.k}-th powers"


def kth_power_free_class(q: Rat, k: int, bit_bound: int | None = None) -> KthPowerFreeClass:
    """Canonical class of q modulo k-th powers (full factorization underneath)."""
    q = Fraction(q)
    if q == 0:
        raise InputError("zero has no power-free class")
    if k < 2:
        raise InputError("classes need k >= 2")
    sgn, fac = factor_rational(q, bit_bound)
    factors = tuple(sorted((p, e % k) for p, e in fac.items() if e % k))
    sign = 1 if k % 2 == 1 else sgn
    return KthPowerFreeClass(k, sign, factors)


def twist_class_of_u(S: QuotientSurface, F: ParamFamily, u: Rat,
                     bit_bound: int | None = None):
    """(class of f(t(u)), representative l = f(t(u))).

    Postcondition check built in: the class of g(x(u)) must agree, which the
    surface equation forces since f(t(u)) y(u)^k = g(x(u)).
    """
    if F.variant != GENERAL or (F.k, F.n) != (S.k, S.n):
        raise InputError("family does not match the surface exponents")
    coeffs = dict(a=S.a, b=S.b, c=S.c, d=S.d)
    x, y, t = eval_family(F, coeffs, u)
    l = t ** S.n + S.c * t + S.d
    gx = x ** S.n + S.a * x + S.b
    if l == 0 or gx == 0:
        raise InputError(f"u = {rat_str(Fraction(u))} lands on a zero twist value")
    cls = kth_power_free_class(l, S.k, bit_bound)
    cls_x = kth_power_free_class(gx, S.k, bit_bound)
    if cls != cls_x:
        raise AssertionError("class map inconsistency: f(t(u)) and g(x(u)) disagree")
    return cls, l


@dataclass(frozen=True)
class TwistPairWitness:
    """Verified rational points on the two twists by the same class."""

    u: Fraction
    l: Fraction
    cls: KthPowerFreeClass
    point1: tuple[Fraction, Fraction]  # (x, y1) with l y1^k = x^n + a x + b
    point2: tuple[Fraction, Fraction]  # (t, y2) with l y2^k = t^n + c t + d
    k: int
    n: int

    def verify(self, S: QuotientSurface) -> bool:
        x, y1 = self.point1
        t, y2 = self.point2
        return (
            self.l * y1 ** self.k == x ** self.n + S.a * x + S.b
            and self.l * y2 ** self.k == t ** self.n + S.c * t + S.d
        )


@dataclass
class SimultaneousTwistsResult:
    witnesses: list[TwistPairWitness]
    complete: bool
    height_bound: int
    candidates_scanned: int
    skipped: int


def _u_by_height(height_bound: int):
    """u = p/q enumerated by max(|p|, q), then |p|, then sign (+ first)."""
    for h in range(1, height_bound + 1):
        batch = []
        for p in range(1, h + 1):
            for q in (h,) if p < h else range(1, h + 1):
                if gcd(p, q) == 1:
                    batch.append((p, q))
        batch.sort()
        for p, q in batch:
            yield Fraction(p, q)
            yield Fraction(-p, q)


def simultaneous_twists(S: QuotientSurface, F: ParamFamily, want: int,
                        height_bound: int, bit_bound: int | None = None) -> SimultaneousTwistsResult:
    """Up to `want` witnesses with pairwise distinct classes, by increasing height."""
    if S.degenerate_pair:
        raise InputError("surface is in an excluded degenerate configuration "
                         "(a = c = 0 or b = d = 0)")
    if want < 0 or height_bound < 1:
        raise InputError("want >= 0 and height_bound >= 1 required")
    witnesses: list[TwistPairWitness] = []
    seen: set = set()
    scanned = skipped = 0
    coeffs = dict(a=S.a, b=S.b, c=S.c, d=S.d)
    if want > 0:
        for u in _u_by_height(height_bound):
            scanned += 1
            try:
                x, y, t = eval_family(F, coeffs, u)
                l = t ** S.n + S.c * t + S.d
                if l == 0 or x ** S.n + S.a * x + S.b == 0:
                    skipped += 1
                    continue
                cls = kth_power_free_class(l, S.k, bit_bound)
            except PoleError:
                skipped += 1
                continue
            except FactorizationBoundError as exc:
                log.info("skipping u = %s: %s", u, exc)
                skipped += 1
                continue
            key = (cls.sign, cls.factors)
            if key in seen:
                continue
            w = TwistPairWitness(u, l, cls, (x, y), (t, Fraction(1)), S.k, S.n)
            if not w.verify(S):
                raise AssertionError(f"witness at u = {u} failed exact verification")
            seen.add(key)
            witnesses.append(w)
            if len(witnesses) >= want:
                break
    return SimultaneousTwistsResult(
        witnesses=witnesses,
        complete=len(witnesses) >= want,
        height_bound=height_bound,
        candidates_scanned=scanned,
        skipped=skipped,
    )

"""Exact real-root isolation and real algebraic numbers.

Sturm's theorem drives everything: the number of distinct real roots of a
squarefree p in a half-open interval (a, b] is V(a) - V(b), where V counts
sign changes along the Sturm chain.  Boxes are always half-open (lo, hi]
with rational endpoints; a right endpoint may equal the root only when the
root is rational and was hit exactly (the box is then flagged).

The RealRoot class wraps (squarefree polynomial, isolating box) into a real
algebraic number supporting exact comparison against rationals and other
RealRoots, and exact sign evaluation of further polynomials at the root.
No floating point is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Sequence

from . import _kernel as K
from .errors import InputError
from .qmath import Rat, sign


def int_coeffs(coeffs: Iterable) -> tuple[int, ...]:
    """Clear denominators of a rational coefficient list (positive scaling)."""
    cs = [Fraction(c) for c in coeffs]
    if not cs:
        return ()
    m = lcm(*(c.denominator for c in cs)) if cs else 1
    return K.norm([int(c * m) for c in cs])


def _as_int_poly(p) -> tuple[int, ...]:
    """Accept an MPoly (univariate), a UPoly-like, or a coefficient sequence."""
    if hasattr(p, "univariate_coeffs"):
        return int_coeffs(p.univariate_coeffs())
    if isinstance(p, (list, tuple)):
        return int_coeffs(p)
    raise InputError(f"cannot interpret {type(p).__name__} as a univariate polynomial")


@lru_cache(maxsize=512)
def _sf_chain(ints: tuple[int, ...]):
    sf = K.squarefree(ints)
    return sf, tuple(K.sturm_chain(sf))


def count_real_roots(p, lo: Fraction | None = None, hi: Fraction | None = None) -> int:
    """Distinct real roots of p in (lo, hi]; None endpoints mean unbounded."""
    ints = _as_int_poly(p)
    if not ints:
        raise InputError("zero polynomial")
    if len(ints) == 1:
        return 0
    sf, chain = _sf_chain(ints)
    a = None if lo is None else (Fraction(lo).numerator, Fraction(lo).denominator)
    b = None if hi is None else (Fraction(hi).numerator, Fraction(hi).denominator)
    return K.count_between(list(chain), a, b)


@dataclass
class RootBox:
    """Half-open interval (low, high] isolating exactly one real root.

    `simple` records that the boxed polynomial was made squarefree first, so
    the root is multiplicity-free; `exact` is set when high IS the root.
    """

    low: Fraction
    high: Fraction
    simple: bool = True
    exact: bool = False

    def width(self) -> Fraction:
        return self.high - self.low

    def as_pairs(self):
        return (
            (self.low.numerator, self.low.denominator),
            (self.high.numerator, self.high.denominator),
        )


def isolate_real_roots(p) -> list[RootBox]:
    """Disjoint ordered boxes, one per distinct real root (squarefree part first)."""
    ints = _as_int_poly(p)
    if not ints:
        raise InputError("zero polynomial")
    if len(ints) == 1:
        return []
    sf, chain = _sf_chain(ints)
    boxes = K.isolate(sf, list(chain))
    out = []
    for ln, ld, hn, hd in boxes:
        hi = Fraction(hn, hd)
        out.append(
            RootBox(Fraction(ln, ld), hi, simple=True, exact=K.sign_at(sf, hn, hd) == 0)
        )
    return out


def poly_sign_at(p, q: Rat) -> int:
    """Exact sign of p(q) for rational q."""
    ints = _as_int_poly(p)
    q = Fraction(q)
    return K.sign_at(ints, q.numerator, q.denominator)


def refine_box(p, box: RootBox, width: Rat) -> RootBox:
    """Shrink the box below `width` by Sturm-guided bisection (no-op if already)."""
    width = Fraction(width)
    if width <= 0:
        raise InputError("width must be positive")
    if box.width() < width:
        return box
    ints = _as_int_poly(p)
    sf, chain = _sf_chain(ints)
    lo_pair, hi_pair = box.as_pairs()
    ln, ld, hn, hd = K.refine(
        list(chain), lo_pair + hi_pair, width.numerator, width.denominator
    )
    hi = Fraction(hn, hd)
    return RootBox(Fraction(ln, ld), hi, box.simple, exact=K.sign_at(sf, hn, hd) == 0)


@dataclass
class RealRoot:
    """A real algebraic number: the unique root of `poly` in (lo, hi].

    poly is squarefree and primitive with positive leading coefficient.
    When the root is rational, `exact` is set and the box is degenerate.
    """

    poly: tuple[int, ...]
    lo: Fraction
    hi: Fraction
    exact: Fraction | None = None
    _chain: tuple = field(default=None, repr=False, compare=False)

    @staticmethod
    def from_rational(v: Rat) -> "RealRoot":
        v = Fraction(v)
        return RealRoot((-v.numerator, v.denominator), v - 1, v, exact=v)

    @staticmethod
    def roots_of(p) -> list["RealRoot"]:
        ints = _as_int_poly(p)
        if not ints:
            raise InputError("zero polynomial")
        if len(ints) == 1:
            return []
        sf, chain = _sf_chain(ints)
        out = []
        for ln, ld, hn, hd in K.isolate(sf, list(chain)):
            hi = Fraction(hn, hd)
            exact = hi if K.sign_at(sf, hn, hd) == 0 else None
            out.append(RealRoot(sf, Fraction(ln, ld), hi, exact=exact, _chain=chain))
        return out

    def chain(self):
        if self._chain is None:
            _, self._chain = _sf_chain(self.poly)
        return self._chain

    def refine_step(self) -> None:
        if self.exact is not None:
            self.lo = self.exact - (self.hi - self.lo) / 2
            self.hi = self.exact
            return
        mid = (self.lo + self.hi) / 2
        if K.sign_at(self.poly, mid.numerator, mid.denominator) == 0:
            self.exact = mid
            self.lo, self.hi = mid - (self.hi - self.lo) / 4, mid
            return
        a = (self.lo.numerator, self.lo.denominator)
        m = (mid.numerator, mid.denominator)
        if K.count_between(list(self.chain()), a, m) == 1:
            self.hi = mid
        else:
            self.lo = mid

    def refine_below(self, width: Rat) -> None:
        width = Fraction(width)
        while self.hi - self.lo >= width:
            self.refine_step()

    def sign_of(self, r) -> int:
        """Exact sign of r(alpha) at this root."""
        r_ints = _as_int_poly(r)
        if not r_ints:
            return 0
        if self.exact is not None:
            return K.sign_at(r_ints, self.exact.numerator, self.exact.denominator)
        g = K.gcd_poly(self.poly, r_ints)
        if len(g) > 1:
            gsf, gchain = _sf_chain(g)
            a = (self.lo.numerator, self.lo.denominator)
            b = (self.hi.numerator, self.hi.denominator)
            if K.count_between(list(gchain), a, b) >= 1:
                return 0
        rsf, rchain = _sf_chain(r_ints)
        while True:
            a = (self.lo.numerator, self.lo.denominator)
            b = (self.hi.numerator, self.hi.denominator)
            if K.count_between(list(rchain), a, b) == 0:
                return K.sign_at(r_ints, b[0], b[1])
            self.refine_step()

    def cmp_rational(self, v: Rat) -> int:
        """Sign of (alpha - v)."""
        v = Fraction(v)
        if self.exact is not None:
            return sign(self.exact - v)
        if K.sign_at(self.poly, v.numerator, v.denominator) == 0:
            # v is a root of poly; equal iff v sits in this box
            if self.lo < v <= self.hi:
                return 0
            return 1 if v <= self.lo else -1
        while self.lo < v <= self.hi:
            self.refine_step()
        return 1 if v <= self.lo else -1

    def cmp(self, other: "RealRoot") -> int:
        """Total order: sign of (self - other), exact."""
        if other.exact is not None:
            return self.cmp_rational(other.exact)
        if self.exact is not None:
            return -other.cmp_rational(self.exact)
        g = K.gcd_poly(self.poly, other.poly)
        gdata = _sf_chain(g) if len(g) > 1 else None
        while True:
            if self.hi <= other.lo:
                return -1
            if other.hi <= self.lo:
                return 1
            olo, ohi = max(self.lo, other.lo), min(self.hi, other.hi)
            if gdata is not None and olo < ohi:
                a = (olo.numerator, olo.denominator)
                b = (ohi.numerator, ohi.denominator)
                in_self = K.count_between(list(self.chain()), a, b) == 1
                in_other = K.count_between(list(other.chain()), a, b) == 1
                if in_self and in_other:
                    if K.count_between(list(gdata[1]), a, b) >= 1:
                        return 0
                if not in_self or not in_other:
                    # one of the roots left the overlap; keep bisecting
                    pass
            self.refine_step()
            other.refine_step()

    def __lt__(self, other):
        return self.cmp(other) < 0

    def __float__(self) -> float:
        if self.exact is not None:
            return float(self.exact)
        return float((self.lo + self.hi) / 2)


def sign_at_algebraic(r, root: RealRoot) -> int:
    """Sign of the polynomial r at the algebraic point `root` (exact)."""
    return root.sign_of(r)

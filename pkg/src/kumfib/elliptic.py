"""Short Weierstrass elliptic curves over Q: group law, twists, torsion.

Torsion certification is rigorous and unconditional over Q:

  * Lutz-Nagell gives a fast SOUND non-torsion path: on any integral model,
    torsion points have integer coordinates and y = 0 or y^2 | disc, so a
    failure certifies infinite order.  It is never used to claim torsion.
  * Torsion claims always come from explicit multiples nP = O with
    n <= 12; by Mazur's theorem no rational point has order 11 or > 12,
    so 12 distinct nonzero multiples certify non-torsion.  The search depth
    is deliberately not configurable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import FactorizationBoundError, InputError, NotOnCurveError
from .factorint import factorize
from .qmath import Rat, rat_str


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 = x^3 + A x + B with nonzero discriminant."""

    A: Fraction
    B: Fraction

    def __post_init__(self):
        object.__setattr__(self, "A", Fraction(self.A))
        object.__setattr__(self, "B", Fraction(self.B))
        if self.discriminant() == 0:
            raise InputError(
                f"singular curve: discriminant of y^2 = x^3 + ({self.A})x + ({self.B}) is zero"
            )

    def discriminant(self) -> Fraction:
        return -16 * (4 * self.A ** 3 + 27 * self.B ** 2)

    def test(self, x: Rat, y: Rat) -> bool:
        x, y = Fraction(x), Fraction(y)
        return y * y == x ** 3 + self.A * x + self.B

    def __str__(self):
        return f"y^2 = x^3 + ({rat_str(self.A)})*x + ({rat_str(self.B)})"


@dataclass(frozen=True)
class ECPoint:
    """Affine point or the point at infinity (x = y = None)."""

    x: Fraction | None
    y: Fraction | None

    @staticmethod
    def infinity() -> "ECPoint":
        return ECPoint(None, None)

    @staticmethod
    def of(x: Rat, y: Rat) -> "ECPoint":
        return ECPoint(Fraction(x), Fraction(y))

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self):
        if self.is_infinity:
            return "inf"
        return f"({rat_str(self.x)}, {rat_str(self.y)})"


INF = ECPoint.infinity()


def _require_on_curve(E: WeierstrassCurve, P: ECPoint) -> None:
    if not P.is_infinity and not E.test(P.x, P.y):
        raise NotOnCurveError(f"point {P} is not on {E}")


def ec_neg(P: ECPoint) -> ECPoint:
    if P.is_infinity:
        return P
    return ECPoint(P.x, -P.y)


def ec_add(E: WeierstrassCurve, P: ECPoint, Q: ECPoint) -> ECPoint:
    """Chord-tangent addition with the flex at infinity as identity."""
    _require_on_curve(E, P)
    _require_on_curve(E, Q)
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    if P.x == Q.x and P.y == -Q.y:
        # vertical line (covers doubling a 2-torsion point)
        return INF
    if P == Q:
        lam = (3 * P.x * P.x + E.A) / (2 * P.y)
    else:
        lam = (Q.y - P.y) / (Q.x - P.x)
    x3 = lam * lam - P.x - Q.x
    y3 = lam * (P.x - x3) - P.y
    return ECPoint(x3, y3)


def ec_mul(E: WeierstrassCurve, n: int, P: ECPoint) -> ECPoint:
    _require_on_curve(E, P)
    if n < 0:
        return ec_mul(E, -n, ec_neg(P))
    R = INF
    Q = P
    while n:
        if n & 1:
            R = _add_unchecked(E, R, Q)
        n >>= 1
        if n:
            Q = _add_unchecked(E, Q, Q)
    return R


def _add_unchecked(E, P, Q):
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    if P.x == Q.x and P.y == -Q.y:
        return INF
    if P == Q:
        lam = (3 * P.x * P.x + E.A) / (2 * P.y)
    else:
        lam = (Q.y - P.y) / (Q.x - P.x)
    x3 = lam * lam - P.x - Q.x
    return ECPoint(x3, lam * (P.x - x3) - P.y)


# -- integral models ---------------------------------------------------------


def _minimal_lambda(dA: int, dB: int, bit_bound: int | None = None) -> int:
    """Least positive lam with lam^4/dA and lam^6/dB integral."""
    lam = 1
    fa = factorize(dA, bit_bound)
    fb = factorize(dB, bit_bound)
    for p in sorted(set(fa) | set(fb)):
        ea = fa.get(p, 0)
        eb = fb.get(p, 0)
        lam *= p ** max(-(-ea // 4), -(-eb // 6))
    return lam


def to_integral_model(E: WeierstrassCurve, P: ECPoint, bit_bound: int | None = None):
    """(E', P', lam): integer-coefficient model via (x, y) -> (lam^2 x, lam^3 y).

    lam is the minimal positive integer clearing the denominators of A and B
    (A scales by lam^4, B by lam^6).  P maps along; its coordinates need not
    become integral, which is exactly what the Lutz-Nagell test inspects.
    """
    _require_on_curve(E, P)
    lam = _minimal_lambda(E.A.denominator, E.B.denominator, bit_bound)
    return _scale_model(E, P, lam)


def _scale_model(E: WeierstrassCurve, P: ECPoint, lam: int):
    E2 = WeierstrassCurve(E.A * lam ** 4, E.B * lam ** 6)
    if P.is_infinity:
        return E2, INF, Fraction(lam)
    return E2, ECPoint(P.x * lam * lam, P.y * lam ** 3), Fraction(lam)


# -- quadratic twists ---------------------------------------------------------


@dataclass(frozen=True)
class TwistMap:
    """Transport between q*y^2 = x^3 + A x + B and its Weierstrass model.

    Forward: a solution (x, y) of the twisted equation lands on
    Y^2 = X^3 + q^2 A X + q^3 B via (X, Y) = (q x, q^2 y).
    """

    q: Fraction

    def apply(self, x: Rat, y: Rat) -> ECPoint:
        x, y = Fraction(x), Fraction(y)
        return ECPoint(self.q * x, self.q * self.q * y)

    def unapply(self, P: ECPoint):
        if P.is_infinity:
            raise InputError("cannot pull back the point at infinity")
        return P.x / self.q, P.y / (self.q * self.q)

    def describe(self) -> str:
        q = rat_str(self.q)
        return f"(x, y) |-> (({q})*x, ({q})^2*y)"


def quadratic_twist(E: WeierstrassCurve, q: Rat):
    """Twist by q: returns (Y^2 = X^3 + q^2 A X + q^3 B, transport map).

    Twisting by q*s^2 yields a curve isomorphic over Q, so only the square
    class of q matters.
    """
    q = Fraction(q)
    if q == 0:
        raise InputError("cannot twist by zero")
    return WeierstrassCurve(q * q * E.A, q ** 3 * E.B), TwistMap(q)


# -- torsion certification -----------------------------------------------------


@dataclass(frozen=True)
class TorsionVerdict:
    is_torsion: bool
    order: int | None = None
    method: str | None = None  # "lutz-nagell" | "mazur-multiples"
    evidence: str = ""

    def __str__(self):
        if self.is_torsion:
            return f"Torsion(order={self.order})"
        return f"NonTorsion({self.method}: {self.evidence})"


def _integral_model_for_torsion(E, P, bit_bound):
    try:
        return to_integral_model(E, P, bit_bound)
    except FactorizationBoundError:
        # A sound non-minimal fallback: Lutz-Nagell holds on ANY integral
        # model, so clearing denominators crudely loses nothing but size.
        lam = lcm(E.A.denominator, E.B.denominator)
        return _scale_model(E, P, lam)


def torsion_test(E: WeierstrassCurve, P: ECPoint, bit_bound: int | None = None) -> TorsionVerdict:
    """Certify the exact torsion order (<= 12) or non-torsion, rigorously.

    Contract: pass to an integral model; if P or 2P is non-integral, or
    y(P) != 0 with y(P)^2 not dividing the discriminant, the point is
    non-torsion by Lutz-Nagell.  Otherwise compute nP for n = 2..12 and
    report the first n with nP = O; if none, Mazur's bound certifies
    non-torsion.
    """
    _require_on_curve(E, P)
    if P.is_infinity:
        raise InputError("torsion_test expects an affine point (O has order 1)")
    E2, P2, lam = _integral_model_for_torsion(E, P, bit_bound)
    if P2.x.denominator != 1 or P2.y.denominator != 1:
        return TorsionVerdict(
            False, method="lutz-nagell",
            evidence=f"P = {P2} is non-integral on the integral model {E2}",
        )
    disc = E2.discriminant()
    if P2.y != 0 and disc % (P2.y * P2.y) != 0:
        return TorsionVerdict(
            False, method="lutz-nagell",
            evidence=f"y(P)^2 = {P2.y ** 2} does not divide disc = {rat_str(disc)}",
        )
    D = _add_unchecked(E2, P2, P2)
    if not D.is_infinity and (D.x.denominator != 1 or D.y.denominator != 1):
        return TorsionVerdict(
            False, method="lutz-nagell",
            evidence=f"2P = {D} is non-integral on the integral model {E2}",
        )
    R = P2
    for n in range(2, 13):
        R = _add_unchecked(E2, R, P2)
        if R.is_infinity:
            return TorsionVerdict(True, order=n, evidence=f"{n}P = O")
    return TorsionVerdict(
        False, method="mazur-multiples",
        evidence="nP != O for all n <= 12; over Q torsion orders are at most 12",
    )

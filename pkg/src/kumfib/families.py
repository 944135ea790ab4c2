"""The three symbolic parametrization families and their exact verification.

Each family is a triple (x(u), y(u), t(u)) of rational functions over the
free coefficient symbols that maps the u-line into both a curve inside the
surface and the surface itself:

  general (k, n):  x = (d u^(kn) - b)/(a - c u^(kn-k)),  y = u^n,  t = x/u^k
                   satisfying (c t + d) y^k = a x + b  and the surface
                   equation (t^n + c t + d) y^k = x^n + a x + b.

  quartic j=1728:  on the pencil y^2 = x^3 + a x twisted by t^4 + c t + d,
                   with (c t + d) y^2 = a x.

  sextic j=0:      on the pencil y^2 = x^3 + b twisted by t^6 + c t + d,
                   with (c t + d) y^2 = b.

Verification is symbolic over the fraction field with a, b, c, d free: the
identity differences are reduced to the literal zero polynomial by clearing
denominators (no gcd, no numerics).  Numeric spot checks live in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import InputError, PoleError
from .mpoly import MPoly, RatFunc, compose_poly
from .qmath import Rat

GENERAL = "general"
QUARTIC_1728 = "quartic-1728"
SEXTIC_0 = "sextic-0"


@dataclass(frozen=True)
class ParamFamily:
    variant: str
    k: int | None
    n: int | None
    x: RatFunc
    y: RatFunc
    t: RatFunc
    coeff_symbols: tuple[str, ...]

    def triple(self):
        return (self.x, self.y, self.t)

    def display(self) -> str:
        return f"({self.x.render()}, {self.y.render()}, {self.t.render()})"

    def f_degree(self) -> int:
        """Degree of the t-side trinomial t^deg + c t + d."""
        if self.variant == GENERAL:
            return self.n
        return 4 if self.variant == QUARTIC_1728 else 6


def build_family(variant: str, k: int | None = None, n: int | None = None) -> ParamFamily:
    a, b, c, d, u = (MPoly.var(v) for v in "abcdu")
    if variant == GENERAL:
        if k is None or n is None or k < 2 or n < 2:
            raise InputError("the general family needs k >= 2 and n >= 2")
        x = RatFunc(d * u ** (k * n) - b, a - c * u ** (k * n - k))
        y = RatFunc(u ** n)
        t = x / RatFunc(u ** k)
        return ParamFamily(GENERAL, k, n, x, y, t, ("a", "b", "c", "d"))
    if variant == QUARTIC_1728:
        x = RatFunc(d ** 2 * u ** 8 - 2 * a * c ** 4 * d * u ** 4 + a ** 2 * c ** 8,
                    c ** 4 * u ** 6)
        y = RatFunc(a * c ** 4 - d * u ** 4, c ** 4 * u)
        t = RatFunc(a * c ** 4 - d * u ** 4, c * u ** 4)
        return ParamFamily(QUARTIC_1728, None, None, x, y, t, ("a", "c", "d"))
    if variant == SEXTIC_0:
        x = RatFunc(d ** 2 * u ** 12 - 2 * b ** 7 * d * u ** 6 + b ** 14,
                    b ** 2 * c ** 2 * u ** 10)
        y = RatFunc(u ** 3, b ** 3)
        t = RatFunc(b ** 7 - d * u ** 6, c * u ** 6)
        return ParamFamily(SEXTIC_0, None, None, x, y, t, ("b", "c", "d"))
    raise InputError(f"unknown family variant {variant!r}")


def _identity_polys(F: ParamFamily):
    a, b, c, d = (MPoly.var(v) for v in "abcd")
    X, Y, T = MPoly.var("x"), MPoly.var("y"), MPoly.var("t")
    if F.variant == GENERAL:
        curve = (c * T + d) * Y ** F.k - (a * X + b)
        surface = (T ** F.n + c * T + d) * Y ** F.k - (X ** F.n + a * X + b)
    elif F.variant == QUARTIC_1728:
        curve = (c * T + d) * Y ** 2 - a * X
        surface = (T ** 4 + c * T + d) * Y ** 2 - (X ** 3 + a * X)
    else:
        curve = (c * T + d) * Y ** 2 - b
        surface = (T ** 6 + c * T + d) * Y ** 2 - (X ** 3 + b)
    return curve, surface


def verify_family_identities(F: ParamFamily) -> bool:
    """Both defining identities reduce to the literal zero polynomial."""
    mapping = {"x": F.x, "y": F.y, "t": F.t}
    for ident in _identity_polys(F):
        num, _den = compose_poly(ident, mapping)
        if not num.is_zero:
            return False
    return True


def identity_residuals(F: ParamFamily):
    """The two cleared-denominator residual polynomials (both zero iff valid)."""
    mapping = {"x": F.x, "y": F.y, "t": F.t}
    return tuple(compose_poly(ident, mapping)[0] for ident in _identity_polys(F))


def _check_coeffs(F: ParamFamily, coeffs: Mapping[str, Fraction]):
    missing = [s for s in F.coeff_symbols if s not in coeffs]
    if missing:
        raise InputError(f"missing coefficients {missing} for family {F.variant}")
    vals = {s: Fraction(coeffs[s]) for s in F.coeff_symbols}
    if F.variant == GENERAL:
        if vals["a"] == 0 and vals["b"] == 0:
            raise InputError("need a or b nonzero")
        if vals["c"] == 0 and vals["d"] == 0:
            raise InputError("need c or d nonzero")
    elif F.variant == QUARTIC_1728:
        if vals["a"] == 0 or vals["c"] == 0 or vals["d"] == 0:
            raise InputError("the quartic family needs a, c, d all nonzero")
    else:
        if vals["b"] == 0 or vals["c"] == 0:
            raise InputError("the sextic family needs b and c nonzero")
    return vals


def eval_family(F: ParamFamily, coeffs: Mapping[str, Rat], u: Rat):
    """Exact (x, y, t) at a rational u; raises PoleError at the finitely many poles."""
    u = Fraction(u)
    if u == 0:
        raise PoleError("u", u)
    assignment = dict(_check_coeffs(F, coeffs))
    assignment["u"] = u
    out = []
    for comp in F.triple():
        den_val = comp.den.evaluate(assignment)
        if den_val == 0:
            raise PoleError(comp.den.render(), u)
        out.append(comp.num.evaluate(assignment) / den_val)
    return tuple(out)


def chart_curve(k: int, n: int) -> MPoly:
    """The intermediate plane curve t r (c r^(n-1) - a) - (b - d r^n).

    The variable `x` stands for the chart coordinate r = x/t; substituting
    r = u^k, t = t(u) kills it identically, and y^k = r^n closes the chain
    back to the surface.  Exposed for testing only.
    """
    a, b, c, d = (MPoly.var(v) for v in "abcd")
    r, t = MPoly.var("x"), MPoly.var("t")
    return t * r * (c * r ** (n - 1) - a) - (b - d * r ** n)


def chart_identity_holds(k: int, n: int) -> bool:
    """chart_curve vanishes identically under r = u^k, t = t(u)."""
    F = build_family(GENERAL, k, n)
    u = MPoly.var("u")
    num, _ = compose_poly(chart_curve(k, n), {"x": RatFunc(u ** k), "t": F.t})
    return num.is_zero

"""Quotient surfaces (t^n+ct+d) y^k = x^n+ax+b, their fibers, and exact real topology.

fiber_t extracts the elliptic fiber at t = t0 as a quadratic twist with an
exact point transport; fiber_y extracts the plane cubic g(x) = y0^2 f(t)
(projective coordinates X <-> x, Y <-> t).

real_component_census counts connected components of a separated real curve
phi(x) = psi(t) exactly.  The sweep runs over the VALUE line: between
consecutive critical values of phi and psi the curve is a trivial grid of
sheets (one per x-branch and t-branch pair), and sheets glue across a
critical value by the order-multiset rule: a fold (local extremum at that
level) absorbs the two branches straddling it, all remaining branches pass
through in order.  Every ordering decision is an exact comparison of real
algebraic numbers, so the census is certified, not sampled.  Smoothness
(checked first via critical-value resultants) guarantees x-folds and
t-folds never share a level, which is what makes the gluing sound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import _kernel as K
from .elliptic import ECPoint, WeierstrassCurve, quadratic_twist
from .cubic import PlaneCubic, ProjPoint
from .errors import DegenerateFiberError, InputError, SingularCurveError
from .qmath import Rat, interval_eval, rat_str, simplest_rational_in
from .realroots import RealRoot, count_real_roots, int_coeffs

# ---------------------------------------------------------------------------
# surfaces and pencils
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuotientSurface:
    """(t^n + c t + d) y^k = x^n + a x + b."""

    k: int
    n: int
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.k < 2 or self.n < 2:
            raise InputError("surface exponents require k >= 2 and n >= 2")
        if self.a == 0 and self.b == 0:
            raise InputError("need a or b nonzero")
        if self.c == 0 and self.d == 0:
            raise InputError("need c or d nonzero")

    @property
    def degenerate_pair(self) -> bool:
        """The excluded configurations a=c=0 or b=d=0 (curve decomposes)."""
        return (self.a == 0 and self.c == 0) or (self.b == 0 and self.d == 0)

    @property
    def c1_geometrically_irreducible(self) -> bool:
        """Sufficient criterion: gcd(k,n)=1, b != 0 and a^n d^(n-1) != b^(n-1) c^n."""
        from math import gcd

        return (
            gcd(self.k, self.n) == 1
            and self.b != 0
            and self.a ** self.n * self.d ** (self.n - 1)
            != self.b ** (self.n - 1) * self.c ** self.n
        )

    def g_coeffs(self) -> list[Fraction]:
        """x^n + a x + b, dense low-first."""
        out = [Fraction(0)] * (self.n + 1)
        out[0], out[1], out[self.n] = self.b, self.a, out[self.n] + 1
        return out

    def f_coeffs(self) -> list[Fraction]:
        out = [Fraction(0)] * (self.n + 1)
        out[0], out[1], out[self.n] = self.d, self.c, out[self.n] + 1
        return out

    def contains(self, x: Rat, y: Rat, t: Rat) -> bool:
        x, y, t = Fraction(x), Fraction(y), Fraction(t)
        return (t ** self.n + self.c * t + self.d) * y ** self.k == (
            x ** self.n + self.a * x + self.b
        )

    def __str__(self):
        return (
            f"(t^{self.n} + ({rat_str(self.c)})t + ({rat_str(self.d)})) y^{self.k}"
            f" = x^{self.n} + ({rat_str(self.a)})x + ({rat_str(self.b)})"
        )


def build_quotient_surface(k: int, n: int, a: Rat, b: Rat, c: Rat, d: Rat) -> QuotientSurface:
    return QuotientSurface(k, n, Fraction(a), Fraction(b), Fraction(c), Fraction(d))


@dataclass(frozen=True)
class TwistPencil:
    """Quadratic twist family E^{f(t)} with f(t) = t^deg + c t + d.

    j=1728: curve y^2 = x^3 + A x (A != 0), quartic f, needs c, d != 0.
    j=0:    curve y^2 = x^3 + B (B != 0), sextic f, needs c != 0.
    """

    curve: WeierstrassCurve
    f_degree: int
    c: Fraction
    d: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c", Fraction(self.c))
        object.__setattr__(self, "d", Fraction(self.d))
        if self.f_degree == 4:
            if self.curve.B != 0 or self.curve.A == 0:
                raise InputError("quartic pencil needs a curve y^2 = x^3 + Ax with A != 0")
            if self.c == 0 or self.d == 0:
                raise InputError("quartic pencil needs c != 0 and d != 0")
        elif self.f_degree == 6:
            if self.curve.A != 0 or self.curve.B == 0:
                raise InputError("sextic pencil needs a curve y^2 = x^3 + B with B != 0")
            if self.c == 0:
                raise InputError("sextic pencil needs c != 0")
        else:
            raise InputError("f-degree must be 4 or 6")

    def f_coeffs(self) -> list[Fraction]:
        out = [Fraction(0)] * (self.f_degree + 1)
        out[0], out[1], out[self.f_degree] = self.d, self.c, Fraction(1)
        return out

    def f_at(self, t: Rat) -> Fraction:
        t = Fraction(t)
        return t ** self.f_degree + self.c * t + self.d


def _poly_at(coeffs, t: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


@dataclass(frozen=True)
class FiberMap:
    """Transport between surface coordinates and the fiber's Weierstrass model."""

    w: Fraction  # f(t0)
    t0: Fraction

    def to_curve(self, x: Rat, y: Rat) -> ECPoint:
        x, y = Fraction(x), Fraction(y)
        return ECPoint(self.w * x, self.w * self.w * y)

    def from_curve(self, P: ECPoint):
        if P.is_infinity:
            raise InputError("the section at infinity has no affine surface chart")
        return P.x / self.w, P.y / (self.w * self.w)


def fiber_t(src: QuotientSurface | TwistPencil, t0: Rat):
    """Elliptic fiber at t = t0: the twist Y^2 = X^3 + w^2 A X + w^3 B, w = f(t0).

    Surface input requires k = 2, n = 3.  Errors on w = 0 and on singular
    fibers.  Returns (curve, FiberMap); the map carries surface solutions of
    w y^2 = g(x) into curve points exactly.
    """
    t0 = Fraction(t0)
    if isinstance(src, QuotientSurface):
        if (src.k, src.n) != (2, 3):
            raise InputError("elliptic fibers require k = 2, n = 3")
        base_A, base_B = src.a, src.b
        w = _poly_at(src.f_coeffs(), t0)
    else:
        base_A, base_B = src.curve.A, src.curve.B
        w = src.f_at(t0)
    if w == 0:
        raise DegenerateFiberError(f"f({rat_str(t0)}) = 0: degenerate fiber")
    if 4 * base_A ** 3 + 27 * base_B ** 2 == 0:
        raise DegenerateFiberError("singular fiber: the base curve is singular")
    curve, _ = quadratic_twist(WeierstrassCurve(base_A, base_B), w)
    return curve, FiberMap(w, t0)


def fiber_y(S: QuotientSurface, y0: Rat) -> PlaneCubic:
    """Plane cubic g(x) - y0^2 f(t) = 0, homogenized with X <-> x, Y <-> t.

    A surface point (x, y0, t) sits on the cubic as (x : t : 1).
    """
    if (S.k, S.n) != (2, 3):
        raise InputError("cubic fibers require k = 2, n = 3")
    y0 = Fraction(y0)
    if y0 == 0:
        raise InputError("y0 = 0 is a degenerate fiber of the y-projection")
    w = y0 * y0
    coeffs = [Fraction(0)] * 10
    coeffs[0] = Fraction(1)          # X^3
    coeffs[5] = S.a                  # X Z^2
    coeffs[6] = -w                   # Y^3
    coeffs[8] = -w * S.c             # Y Z^2
    coeffs[9] = S.b - w * S.d        # Z^3
    return PlaneCubic(coeffs)


def fiber_y_point(x: Rat, t: Rat) -> ProjPoint:
    return ProjPoint(Fraction(x), Fraction(t), Fraction(1))


# ---------------------------------------------------------------------------
# exact real-component census
# ---------------------------------------------------------------------------


@dataclass
class SeparatedCurve:
    """The affine real curve phi(x) = psi(t), both sides univariate over Q."""

    phi: list[Fraction]
    psi: list[Fraction]

    @staticmethod
    def from_fiber_y(S: QuotientSurface, y0: Rat) -> "SeparatedCurve":
        y0 = Fraction(y0)
        if y0 == 0:
            raise InputError("y0 = 0 is a degenerate fiber of the y-projection")
        return SeparatedCurve(S.g_coeffs(), [w * y0 * y0 for w in S.f_coeffs()])

    @staticmethod
    def from_fiber_t(src: QuotientSurface | TwistPencil, t0: Rat) -> "SeparatedCurve":
        """The fiber w y^2 = g(x) at t0 as the separated curve g(x) = w t^2."""
        t0 = Fraction(t0)
        if isinstance(src, QuotientSurface):
            if (src.k, src.n) != (2, 3):
                raise InputError("elliptic fibers require k = 2, n = 3")
            g = src.g_coeffs()
            w = _poly_at(src.f_coeffs(), t0)
        else:
            g = [src.curve.B, src.curve.A, Fraction(0), Fraction(1)]
            w = src.f_at(t0)
        if w == 0:
            raise DegenerateFiberError(f"f({rat_str(t0)}) = 0: degenerate fiber")
        return SeparatedCurve(g, [Fraction(0), Fraction(0), w])

    def contains(self, x: Rat, t: Rat) -> bool:
        return _poly_at(self.phi, Fraction(x)) == _poly_at(self.psi, Fraction(t))


def _deriv(coeffs):
    return [i * coeffs[i] for i in range(1, len(coeffs))]


def _poly_mod(f: list[Fraction], g: list[Fraction]) -> list[Fraction]:
    f = f[:]
    dg = len(g) - 1
    while len(f) - 1 >= dg and any(f):
        while f and f[-1] == 0:
            f.pop()
        if len(f) - 1 < dg:
            break
        q = f[-1] / g[-1]
        shift = len(f) - 1 - dg
        for j in range(dg + 1):
            f[shift + j] -= q * g[j]
        f.pop()
    while f and f[-1] == 0:
        f.pop()
    return f


def critical_value_poly(phi: list[Fraction]) -> tuple[int, ...]:
    """Integer polynomial whose roots are the critical values of phi.

    Characteristic polynomial of multiplication-by-phi on Q[x]/(phi'), which
    equals Res_x(phi'(x), v - phi(x)) up to a nonzero constant.
    """
    dphi = _deriv(phi)
    while dphi and dphi[-1] == 0:
        dphi.pop()
    if len(dphi) <= 1:
        return (1,)
    m = len(dphi) - 1
    # columns: phi * x^i mod phi'
    cols = []
    for i in range(m):
        col = _poly_mod([Fraction(0)] * i + list(phi), dphi)
        col += [Fraction(0)] * (m - len(col))
        cols.append(col)
    M = [[cols[j][i] for j in range(m)] for i in range(m)]
    # Faddeev-LeVerrier: char(v) = v^m + c1 v^(m-1) + ... + cm
    cs = [Fraction(1)]
    N = [[Fraction(1) if i == j else Fraction(0) for j in range(m)] for i in range(m)]
    for k in range(1, m + 1):
        MN = [
            [sum(M[i][l] * N[l][j] for l in range(m)) for j in range(m)]
            for i in range(m)
        ]
        ck = -sum(MN[i][i] for i in range(m)) / k
        cs.append(ck)
        N = [
            [MN[i][j] + (ck if i == j else 0) for j in range(m)]
            for i in range(m)
        ]
    dense = list(reversed(cs))  # low degree first
    return int_coeffs(dense)


def _extrema(coeffs: list[Fraction]):
    """Local extrema of a univariate polynomial as (RealRoot, 'min'|'max')."""
    dints = int_coeffs(_deriv(coeffs))
    if not dints or len(dints) == 1:
        return []
    out = []
    for root in RealRoot.roots_of([Fraction(c) for c in dints]):
        left = _sign_beside(dints, root, -1)
        right = _sign_beside(dints, root, +1)
        if left < 0 < right:
            out.append((root, "min"))
        elif left > 0 > right:
            out.append((root, "max"))
    return out


def _sign_beside(ints, root: RealRoot, side: int) -> int:
    """Sign of the polynomial just left (side=-1) or right (side=+1) of its root.

    The isolating box contains no other root, and its left endpoint is never
    a root, so the left sign is simply the sign at lo.  On the right, hi may
    be the root itself (exact rational hit); then probe just beyond it,
    checking with a Sturm count that no other root slipped in.
    """
    ints = tuple(ints)
    if side < 0:
        s = K.sign_at(ints, root.lo.numerator, root.lo.denominator)
        assert s != 0
        return s
    s = K.sign_at(ints, root.hi.numerator, root.hi.denominator)
    if s != 0:
        return s
    # hi is the root exactly
    fr = [Fraction(c) for c in ints]
    step = Fraction(1, 2)
    while True:
        b = root.hi + step
        if count_real_roots(fr, root.hi, b) == 0:
            s = K.sign_at(ints, b.numerator, b.denominator)
            if s != 0:
                return s
        step /= 2


def _value_of_extremum_matches(level: RealRoot, phi: list[Fraction], alpha: RealRoot) -> bool:
    """Decide phi(alpha) == level exactly.

    phi(alpha) is itself a root of the merged critical-value polynomial, and
    the level box isolates its own root among those; so membership of the
    interval enclosure of phi(alpha) in the box decides equality.
    """
    if level.exact is not None:
        return alpha.sign_of(int_coeffs(_shifted(phi, level.exact))) == 0
    while True:
        e1, e2 = interval_eval(phi, alpha.lo, alpha.hi)
        if e2 <= level.lo or e1 > level.hi:
            return False
        if e1 > level.lo and e2 <= level.hi:
            return True
        alpha.refine_step()


@dataclass
class ComponentCensus:
    """Exact component count with per-component x-data.

    components carries (x_lo, x_hi, open_low, open_high): certified rational
    enclosures of the sampled skeleton of each component (the exact extent
    endpoints are algebraic; the enclosure is what the CLI reports).  The
    oval data is exact: for elliptic fibers w y^2 = g(x) with two components
    the bounded one spans two consecutive roots of g.
    """

    count: int
    components: list[tuple]
    oval: tuple[RealRoot, RealRoot] | None = None
    samples: list[tuple] = field(default_factory=list, repr=False)

    def oval_x_interval(self):
        if self.oval is None:
            return None
        return self.oval[0], self.oval[1]


class _DSU:
    def __init__(self):
        self.parent = {}

    def find(self, a):
        p = self.parent.setdefault(a, a)
        if p != a:
            self.parent[a] = p = self.find(p)
        return p

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def _branch_connections(below: list[RealRoot], above: list[RealRoot], folds):
    """Match branches across one critical level on one axis.

    Returns (pass_pairs, max_pairs, min_pairs): pass_pairs are (below_index,
    above_index); max_pairs are (below_i, below_i+1) merging at a max-fold;
    min_pairs are (above_i, above_i+1) emerging from a min-fold.
    """
    max_folds = [r for r, kind in folds if kind == "max"]
    min_folds = [r for r, kind in folds if kind == "min"]

    def fold_positions(folds_list, branches):
        # index i such that branches[i-1] < fold < branches[i]
        positions = []
        for froot in folds_list:
            i = 0
            while i < len(branches) and branches[i].cmp(froot) < 0:
                i += 1
            positions.append(i)
        return positions

    max_pairs = []
    consumed_below = set()
    for froot, pos in zip(max_folds, fold_positions(max_folds, below)):
        i, j = pos - 1, pos
        if i < 0 or j >= len(below) or i in consumed_below or j in consumed_below:
            raise SingularCurveError("fold pairing failed; curve not in general position")
        max_pairs.append((i, j))
        consumed_below.update((i, j))
    min_pairs = []
    consumed_above = set()
    for froot, pos in zip(min_folds, fold_positions(min_folds, above)):
        i, j = pos - 1, pos
        if i < 0 or j >= len(above) or i in consumed_above or j in consumed_above:
            raise SingularCurveError("fold pairing failed; curve not in general position")
        min_pairs.append((i, j))
        consumed_above.update((i, j))
    pass_below = [i for i in range(len(below)) if i not in consumed_below]
    pass_above = [i for i in range(len(above)) if i not in consumed_above]
    if len(pass_below) != len(pass_above):
        raise SingularCurveError("branch bookkeeping failed across a critical value")
    return list(zip(pass_below, pass_above)), max_pairs, min_pairs


def real_component_census(curve: SeparatedCurve) -> ComponentCensus:
    """Exact count of connected components of the affine real curve phi(x) = psi(t)."""
    phi = [Fraction(c) for c in curve.phi]
    psi = [Fraction(c) for c in curve.psi]
    while phi and phi[-1] == 0:
        phi.pop()
    while psi and psi[-1] == 0:
        psi.pop()
    if len(phi) <= 1 or len(psi) <= 1:
        raise InputError("census needs both sides nonconstant")

    v_phi = critical_value_poly(phi)
    v_psi = critical_value_poly(psi)
    if len(K.gcd_poly(v_phi, v_psi)) > 1:
        raise SingularCurveError(
            "phi and psi share a critical value: the curve has a singular point"
        )

    w_ints = K.squarefree(K.mul(v_phi, v_psi))
    levels = RealRoot.roots_of([Fraction(c) for c in w_ints]) if len(w_ints) > 1 else []

    x_extrema = _extrema(phi)
    t_extrema = _extrema(psi)

    samples = _separating_samples(levels)

    # branch data per value interval
    x_branches = [RealRoot.roots_of(_shifted(phi, s)) for s in samples]
    t_branches = [RealRoot.roots_of(_shifted(psi, s)) for s in samples]

    dsu = _DSU()
    sheets = set()
    for r in range(len(samples)):
        for p in range(len(x_branches[r])):
            for q in range(len(t_branches[r])):
                sheets.add((r, p, q))
                dsu.find((r, p, q))

    for r, level in enumerate(levels):
        below_x, above_x = x_branches[r], x_branches[r + 1]
        below_t, above_t = t_branches[r], t_branches[r + 1]
        x_folds = [(root, kind) for root, kind in x_extrema
                   if _value_of_extremum_matches(level, phi, root)]
        t_folds = [(root, kind) for root, kind in t_extrema
                   if _value_of_extremum_matches(level, psi, root)]
        if x_folds and t_folds:
            raise SingularCurveError("x-fold and t-fold at the same level: singular point")
        x_pass, x_max, x_min = _branch_connections(below_x, above_x, x_folds)
        t_pass, t_max, t_min = _branch_connections(below_t, above_t, t_folds)

        for p, p2 in x_pass:
            for q, q2 in t_pass:
                dsu.union((r, p, q), (r + 1, p2, q2))
        for i, j in x_max:
            for q in range(len(below_t)):
                dsu.union((r, i, q), (r, j, q))
        for i, j in t_max:
            for p in range(len(below_x)):
                dsu.union((r, p, i), (r, p, j))
        for i, j in x_min:
            for q2 in range(len(above_t)):
                dsu.union((r + 1, i, q2), (r + 1, j, q2))
        for i, j in t_min:
            for p2 in range(len(above_x)):
                dsu.union((r + 1, p2, i), (r + 1, p2, j))

    classes: dict = {}
    for sheet in sheets:
        classes.setdefault(dsu.find(sheet), []).append(sheet)

    components = []
    for members in classes.values():
        lo = min(x_branches[r][p].lo for r, p, _ in members)
        hi = max(x_branches[r][p].hi for r, p, _ in members)
        open_low = any(r == 0 for r, _, _ in members)
        open_high = any(r == len(samples) - 1 for r, _, _ in members)
        components.append((lo, hi, open_low, open_high))
    components.sort(key=lambda t: (t[0], t[1]))

    census = ComponentCensus(count=len(classes), components=components)
    census.samples = [
        (samples[r],
         [(b.lo, b.hi) for b in x_branches[r]],
         [(b.lo, b.hi) for b in t_branches[r]])
        for r in range(len(samples))
    ]

    # exact oval data for elliptic fibers psi = w t^2
    if census.count == 2 and len(psi) == 3 and psi[1] == 0 and psi[0] == 0:
        w = psi[2]
        g_roots = RealRoot.roots_of(phi)
        if len(g_roots) == 3:
            census.oval = (g_roots[0], g_roots[1]) if w > 0 else (g_roots[1], g_roots[2])
    return census


def _shifted(coeffs: list[Fraction], v: Fraction) -> list[Fraction]:
    out = list(coeffs)
    out[0] = out[0] - v
    return out


def _separating_samples(levels: list[RealRoot]) -> list[Fraction]:
    """Rationals strictly interleaving the given ordered algebraic levels."""
    if not levels:
        return [Fraction(0)]
    # refine until boxes are pairwise disjoint with positive gaps
    changed = True
    while changed:
        changed = False
        for a, b in zip(levels, levels[1:]):
            while not a.hi < b.lo:
                a.refine_step()
                b.refine_step()
                changed = True
    out = [Fraction(int(levels[0].lo) - 1)]
    for a, b in zip(levels, levels[1:]):
        lo, hi = a.hi, b.lo
        if a.exact is not None and a.exact == lo:
            lo = lo + (hi - lo) / 4
        out.append(simplest_rational_in(lo, hi))
    out.append(Fraction(int(levels[-1].hi) + 2))
    return out


def oval_contains(census: ComponentCensus, x: Rat) -> bool:
    """x in the closed oval x-interval (exact; census.count must be 2)."""
    if census.count != 2:
        raise InputError("oval queries need a two-component census")
    if census.oval is None:
        raise InputError("census carries no oval data (not an elliptic fiber)")
    x = Fraction(x)
    lo, hi = census.oval
    return lo.cmp_rational(x) <= 0 <= hi.cmp_rational(x)


def assumption_bounds_check(g_coeffs, f_coeffs, t1: Rat, y0: Rat) -> bool:
    """Does f(t1) y0^2 lie strictly between the local min and max of g?

    Vacuously true when g does not have three distinct real roots.  For a
    three-real-root cubic g the literal test is: g(x) - f(t1) y0^2 has three
    distinct real roots (equivalent to m < f(t1) y0^2 < M, decided by Sturm
    counts, no floating point).
    """
    g = [Fraction(c) for c in g_coeffs]
    f = [Fraction(c) for c in f_coeffs]
    if count_real_roots(g) != 3:
        return True
    level = _poly_at(f, Fraction(t1)) * Fraction(y0) ** 2
    return count_real_roots(_shifted(g, level)) == 3

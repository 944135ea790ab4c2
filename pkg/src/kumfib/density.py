"""Constructive density witnesses: positive-rank fibers near any target.

Pencil route (j = 1728 quartic / j = 0 sextic): invert t(u) exactly (the
equation t(u) = t1 is a binomial in u^4 or u^6), pick small rationals u from
a refined root box until |t(u) - t1| < epsilon, transport the parametrized
point into the fiber and certify it non-torsion.  Torsion hits or poles are
skipped; they can occur for only finitely many u, and every emitted witness
carries a reproducible certificate.

Kummer route: given a seed point on the surface, first certify it
non-torsion in its vertical fiber, then (if the y-level fails the
connectivity or bound conditions) scan group-law multiples for a better
y-level, certify the chosen point non-torsion-class in its cubic fiber, and
walk the (3n+1)P chord sequence in both directions collecting points whose
t-coordinate lands within epsilon of the target.  Each hit is certified in
its own vertical fiber (plus an exact oval-membership test when g has three
real roots).  Failure at any cap is INCONCLUSIVE, never a refutation:
density along the walk is guaranteed by theory but without effective rates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from . import _kernel as K
from .cubic import (PlaneCubic, ProjPoint, chord, chord_step_backward,
                    chord_step_forward, chord_torsion_test, ChordTorsionVerdict)
from .elliptic import (ECPoint, TorsionVerdict, WeierstrassCurve, ec_add,
                       to_integral_model, torsion_test)
from .errors import (DegenerateFiberError, FactorizationBoundError,
                     Inconclusive, InputError, PoleError, SeedTorsionError,
                     SingularCurveError)
from .families import GENERAL, QUARTIC_1728, SEXTIC_0, ParamFamily, eval_family
from .qmath import Rat, perfect_kth_root, rat_str, simplest_rational_in
from .realroots import RealRoot, count_real_roots, int_coeffs, isolate_real_roots
from .surfaces import (QuotientSurface, SeparatedCurve, TwistPencil, fiber_t,
                       fiber_y, fiber_y_point, assumption_bounds_check,
                       real_component_census)


@dataclass(frozen=True)
class HalfInterval:
    """Open interval with rational or infinite endpoints."""

    lo: Fraction | None  # None = -inf
    hi: Fraction | None  # None = +inf

    def contains(self, t: Rat) -> bool:
        t = Fraction(t)
        return (self.lo is None or t > self.lo) and (self.hi is None or t < self.hi)

    def __str__(self):
        lo = "-inf" if self.lo is None else rat_str(self.lo)
        hi = "inf" if self.hi is None else rat_str(self.hi)
        return f"({lo}, {hi})"


@dataclass(frozen=True)
class DensityCaps:
    multiples: int = 64
    chord_steps: int = 200
    cert_retries: int = 16


def _pencil_coeffs(P: TwistPencil) -> dict:
    if P.f_degree == 4:
        return {"a": P.curve.A, "c": P.c, "d": P.d}
    return {"b": P.curve.B, "c": P.c, "d": P.d}


def _family_matches_pencil(F: ParamFamily, P: TwistPencil) -> bool:
    return (F.variant == QUARTIC_1728 and P.f_degree == 4) or (
        F.variant == SEXTIC_0 and P.f_degree == 6
    )


def half_interval(F: ParamFamily, coeffs: dict) -> HalfInterval:
    """The image of u |-> t(u): a half-line with endpoint -d/c.

    Quartic: t = -d/c + c^3 a / u^4, so the side is the sign of a*c.
    Sextic:  t = -d/c + b^7 / (c u^6), so the side is the sign of b*c.
    """
    c = Fraction(coeffs["c"])
    d = Fraction(coeffs["d"])
    if c == 0:
        raise InputError("half-interval needs c != 0")
    boundary = -d / c
    if F.variant == QUARTIC_1728:
        side = Fraction(coeffs["a"]) * c
    elif F.variant == SEXTIC_0:
        side = Fraction(coeffs["b"]) * c
    else:
        raise InputError("half_interval applies to the quartic and sextic families")
    if side == 0:
        raise InputError("degenerate family coefficients")
    return HalfInterval(boundary, None) if side > 0 else HalfInterval(None, boundary)


def _u_candidates(F: ParamFamily, coeffs: dict, t1: Fraction, eps: Fraction) -> Iterator[tuple]:
    """Yield (u, t(u), |t(u) - t1|) with error < eps, by increasing refinement.

    Solves t(u) = t1 as u^m = R exactly, isolates the positive real root and
    samples small-denominator rationals from ever finer boxes.  Skips u = 0,
    poles, and the y(u) = 0 crossing (a 2-torsion landing spot).
    """
    m = 4 if F.variant == QUARTIC_1728 else 6
    c = Fraction(coeffs["c"])
    d = Fraction(coeffs["d"])
    denom = c * t1 + d
    if denom == 0:
        raise InputError("t1 is the excluded boundary -d/c")
    if F.variant == QUARTIC_1728:
        R = c ** 4 * Fraction(coeffs["a"]) / denom
    else:
        R = Fraction(coeffs["b"]) ** 7 / denom
    if R <= 0:
        raise InputError("t1 lies outside the family's half-interval")
    exact_root = perfect_kth_root(R, m)
    if exact_root is not None:
        root = RealRoot.from_rational(exact_root)
    else:
        poly = [-R] + [Fraction(0)] * (m - 1) + [Fraction(1)]
        pos = [r for r in RealRoot.roots_of(poly) if r.cmp_rational(0) > 0]
        assert len(pos) == 1
        root = pos[0]
    assignment = {s: Fraction(coeffs[s]) for s in F.coeff_symbols}
    seen = set()
    while True:
        cands = [simplest_rational_in(root.lo, root.hi)]
        if root.exact is not None:
            w = root.hi - root.lo
            cands = [root.exact, root.exact - w, root.exact + w] + cands
        for u in cands:
            if u == 0 or u in seen:
                continue
            seen.add(u)
            a = dict(assignment)
            a["u"] = u
            try:
                y_val = F.y.evaluate(a)
                t_val = F.t.evaluate(a)
            except ZeroDivisionError:
                continue
            if y_val == 0:
                continue
            err = abs(t_val - t1)
            if err < eps:
                yield u, t_val, err
        root.refine_step()


def approximate_u_for_t(F: ParamFamily, coeffs: dict, t1: Rat, epsilon: Rat) -> Fraction:
    """A rational u with |t(u) - t1| < epsilon (and y(u) != 0), exactly checked."""
    t1, epsilon = Fraction(t1), Fraction(epsilon)
    if epsilon <= 0:
        raise InputError("epsilon must be positive")
    u, _t, _e = next(_u_candidates(F, coeffs, t1, epsilon))
    return u


def poly_nonneg_on_reals(coeffs) -> bool:
    """f >= 0 on all of R: zero isolated-root boxes, or all roots of even multiplicity."""
    fr = [Fraction(c) for c in coeffs]
    boxes = isolate_real_roots(fr)
    ints = int_coeffs(fr)
    if not boxes:
        return K.sign_at(ints, 0, 1) > 0
    # multiplicity of each root via the derivative gcd chain
    chain = [ints]
    while len(chain[-1]) > 1:
        nxt = K.gcd_poly(chain[-1], K.deriv(chain[-1]))
        if len(nxt) <= 1:
            break
        chain.append(nxt)
    for root in RealRoot.roots_of(fr):
        mult = 1
        for g in chain[1:]:
            if root.sign_of(tuple(g)) == 0:
                mult += 1
            else:
                break
        if mult % 2 == 1:
            return False
    H = K.cauchy_bound(ints)
    return K.sign_at(ints, H, 1) > 0


@dataclass
class DensityWitness:
    """A certified positive-rank fiber within epsilon of the target.

    All invariants are re-checkable: the point satisfies its curve equation
    exactly, |t_prime - t1| < epsilon exactly, and the certificates re-run.
    """

    kind: str  # "pencil" | "kummer"
    t1: Fraction
    epsilon: Fraction
    t_prime: Fraction
    u: Fraction | None
    curve: WeierstrassCurve
    point: ECPoint
    certificate: TorsionVerdict
    error: Fraction
    model: str = "integral"  # which model `curve`/`point` live on
    class_certificate: ChordTorsionVerdict | None = None
    f_nonneg: bool | None = None
    y_level: Fraction | None = None
    oval_checked: bool | None = None
    details: dict = field(default_factory=dict)

    def verify(self) -> bool:
        if self.error != abs(self.t_prime - self.t1) or not self.error < self.epsilon:
            return False
        if self.point.is_infinity or not self.curve.test(self.point.x, self.point.y):
            return False
        v = torsion_test(self.curve, self.point)
        if v.is_torsion or self.certificate.is_torsion:
            return False
        if self.class_certificate is not None and self.class_certificate.is_torsion_class:
            return False
        return True


def pencil_density_witness(P: TwistPencil, F: ParamFamily, t1: Rat, epsilon: Rat,
                           caps: DensityCaps | None = None,
                           bit_bound: int | None = None) -> DensityWitness:
    """Certified witness that some fiber E^{f(t')} with |t' - t1| < eps has rank > 0."""
    caps = caps or DensityCaps()
    t1, epsilon = Fraction(t1), Fraction(epsilon)
    if epsilon <= 0:
        raise InputError("epsilon must be positive")
    if not _family_matches_pencil(F, P):
        raise InputError("family variant does not match the pencil degree")
    coeffs = _pencil_coeffs(P)
    if not half_interval(F, coeffs).contains(t1):
        raise InputError(f"t1 = {rat_str(t1)} is outside the reachable half-interval "
                         f"{half_interval(F, coeffs)}")
    f_nonneg = poly_nonneg_on_reals(P.f_coeffs())

    attempts = 0
    for u, t_prime, err in _u_candidates(F, coeffs, t1, epsilon):
        attempts += 1
        if attempts > caps.cert_retries:
            break
        try:
            x_val, y_val, t_check = eval_family(F, coeffs, u)
        except PoleError:
            continue
        assert t_check == t_prime
        try:
            curve, fmap = fiber_t(P, t_prime)
        except DegenerateFiberError:
            continue
        pt = fmap.to_curve(x_val, y_val)
        verdict = torsion_test(curve, pt, bit_bound)
        if verdict.is_torsion:
            continue
        model = "integral"
        try:
            ci, pi, _lam = to_integral_model(curve, pt, bit_bound)
        except FactorizationBoundError:
            ci, pi, model = curve, pt, "twist"
        return DensityWitness(
            kind="pencil", t1=t1, epsilon=epsilon, t_prime=t_prime, u=u,
            curve=ci, point=pi, certificate=verdict, error=err, model=model,
            f_nonneg=f_nonneg,
            details={"twist_value": fmap.w, "f_degree": P.f_degree},
        )
    raise Inconclusive(
        f"no certified witness within {caps.cert_retries} candidate points",
        {"t1": rat_str(t1), "epsilon": rat_str(epsilon), "attempts": attempts},
    )


# ---------------------------------------------------------------------------
# Kummer-surface witnesses
# ---------------------------------------------------------------------------


def _height(q: Fraction) -> int:
    return max(abs(q.numerator), q.denominator)


def _point_height(p: ProjPoint) -> int:
    return max(_height(c) for c in p.coords())


def _fiber_oval(g_coeffs, w: Fraction):
    """Exact oval x-interval of w y^2 = g(x) when g has three real roots.

    The bounded component spans the two smallest roots of g when w > 0 and
    the two largest when w < 0 (the unbounded branch needs g/w > 0 for
    large |x|).
    """
    roots = RealRoot.roots_of([Fraction(c) for c in g_coeffs])
    if len(roots) != 3:
        return None
    return (roots[0], roots[1]) if w > 0 else (roots[1], roots[2])


def kummer_density_witness(S: QuotientSurface, seed, t1: Rat, epsilon: Rat,
                           caps: DensityCaps | None = None,
                           bit_bound: int | None = None) -> DensityWitness:
    """Witness near t1 on the Kummer-type surface, driven by a seed point.

    seed = (x0, y0, t0) must lie on the surface exactly, in a nondegenerate
    fiber, and be non-torsion there (otherwise SeedTorsionError asks the
    caller for a better seed: the Zariski-density hypothesis is input-level).
    """
    caps = caps or DensityCaps()
    t1, epsilon = Fraction(t1), Fraction(epsilon)
    if epsilon <= 0:
        raise InputError("epsilon must be positive")
    if (S.k, S.n) != (2, 3):
        raise InputError("the Kummer procedure needs k = 2, n = 3")
    x0, y0, t0 = (Fraction(v) for v in seed)
    if not S.contains(x0, y0, t0):
        raise InputError(f"seed ({rat_str(x0)}, {rat_str(y0)}, {rat_str(t0)}) "
                         "is not on the surface")
    if y0 == 0:
        # y = 0 means the fiber point is 2-torsion, and the y-fiber through
        # the seed is degenerate; both disqualify it
        raise SeedTorsionError("seed has y0 = 0 (a 2-torsion landing spot); "
                               "provide a non-torsion seed")

    fiber0, map0 = fiber_t(S, t0)  # raises on degenerate fiber
    P0 = map0.to_curve(x0, y0)
    seed_verdict = torsion_test(fiber0, P0, bit_bound)
    if seed_verdict.is_torsion:
        raise SeedTorsionError(
            f"seed is torsion (order {seed_verdict.order}) in its fiber; "
            "provide a non-torsion seed"
        )

    g = S.g_coeffs()
    f = S.f_coeffs()
    three_roots = count_real_roots(g) == 3

    # (i) find a y-level where the cubic fiber is connected, the bound
    # assumption holds, and the point is non-torsion-class in that fiber
    chosen = None
    multiple = P0
    for m in range(1, caps.multiples + 1):
        if m > 1:
            multiple = ec_add(fiber0, multiple, P0)
            if multiple.is_infinity:
                break  # cannot happen for a certified non-torsion seed
        sx, sy = map0.from_curve(multiple)
        if sy == 0:
            continue
        try:
            census = real_component_census(SeparatedCurve.from_fiber_y(S, sy))
        except (SingularCurveError, InputError):
            continue
        if census.count != 1:
            continue
        if not assumption_bounds_check(g, f, t1, sy):
            continue
        cubic = fiber_y(S, sy)
        Q0 = fiber_y_point(sx, t0)
        class_verdict = chord_torsion_test(cubic, Q0)
        if class_verdict.is_torsion_class:
            continue
        chosen = (sx, sy, cubic, Q0, class_verdict, m)
        break
    if chosen is None:
        raise Inconclusive(
            f"no admissible y-level among {caps.multiples} fiber multiples",
            {"stage": "y-level scan", "multiples": caps.multiples},
        )
    sx, sy, cubic, Q0, class_verdict, m_used = chosen

    # (iii) chord walk in both directions, collecting epsilon-hits
    T = chord(cubic, Q0, Q0)
    hits = []
    fwd = bwd = Q0
    steps = 0
    n_fwd = n_bwd = 0
    while steps < caps.chord_steps:
        if steps % 2 == 0:
            fwd = chord_step_forward(cubic, fwd, Q0, T)
            n_fwd += 1
            cand, n_cand = fwd, n_fwd
        else:
            bwd = chord_step_backward(cubic, bwd, Q0, T)
            n_bwd -= 1
            cand, n_cand = bwd, n_bwd
        steps += 1
        if cand.z == 0:
            continue
        t_val = cand.y  # the cubic's Y coordinate is the surface t
        err = abs(t_val - t1)
        if err < epsilon:
            hits.append((_point_height(cand), n_cand, cand.x, t_val, err))
    if not hits:
        raise Inconclusive(
            f"no walk point within epsilon after {caps.chord_steps} chord steps",
            {"stage": "chord walk", "chord_steps": caps.chord_steps,
             "y_level": rat_str(sy)},
        )
    hits.sort(key=lambda h: (h[0], abs(h[1])))

    # (iv) certify hits, lowest height first
    tried = 0
    for _h, n_cand, x_val, t_val, err in hits:
        if tried >= caps.cert_retries:
            break
        tried += 1
        w_val = t_val ** 3 + S.c * t_val + S.d
        if w_val == 0:
            continue
        fiber, fmap = fiber_t(S, t_val)
        pt = fmap.to_curve(x_val, sy)
        verdict = torsion_test(fiber, pt, bit_bound)
        if verdict.is_torsion:
            continue
        oval_ok = None
        if three_roots:
            if K.sign_at(tuple(int_coeffs(g)),
                         x_val.numerator, x_val.denominator) * (1 if w_val > 0 else -1) < 0:
                continue  # not on the real locus side; cannot happen for real hits
            oval = _fiber_oval(g, w_val)
            lo, hi = oval
            oval_ok = lo.cmp_rational(x_val) <= 0 <= hi.cmp_rational(x_val)
            if not oval_ok:
                continue
        return DensityWitness(
            kind="kummer", t1=t1, epsilon=epsilon, t_prime=t_val, u=None,
            curve=fiber, point=pt, certificate=verdict, error=err,
            model="twist", class_certificate=class_verdict, y_level=sy,
            oval_checked=oval_ok,
            details={"walk_index": n_cand, "multiple": m_used,
                     "seed": (x0, y0, t0), "twist_value": w_val},
        )
    raise Inconclusive(
        "walk produced hits but none certified within the retry cap",
        {"stage": "certification", "hits": len(hits), "cert_retries": caps.cert_retries},
    )

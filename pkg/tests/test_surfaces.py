"""Surfaces, fibers, census vs flood-fill oracle, oval and bound checks."""

import random
from fractions import Fraction as F

import pytest

from kumfib.cubic import cubic_is_smooth
from kumfib.errors import DegenerateFiberError, InputError, SingularCurveError
from kumfib.surfaces import (QuotientSurface, SeparatedCurve, TwistPencil,
                             assumption_bounds_check, build_quotient_surface,
                             fiber_t, fiber_y, fiber_y_point, oval_contains,
                             real_component_census)
from kumfib.elliptic import WeierstrassCurve
from kumfib.realroots import count_real_roots
from oracles import flood_fill_census


def test_build_examples():
    S = build_quotient_surface(2, 3, 1, 1, 2, 3)
    assert not S.degenerate_pair
    with pytest.raises(InputError):
        build_quotient_surface(2, 3, 0, 0, 2, 3)
    with pytest.raises(InputError):
        build_quotient_surface(2, 3, 1, 1, 0, 0)
    with pytest.raises(InputError):
        build_quotient_surface(1, 3, 1, 1, 2, 3)
    S34 = build_quotient_surface(3, 4, 1, 1, 2, 3)
    assert S34.c1_geometrically_irreducible
    # degenerate flags
    assert build_quotient_surface(2, 3, 0, 1, 0, 1).degenerate_pair
    assert build_quotient_surface(2, 3, 1, 0, 1, 0).degenerate_pair


def test_contains_examples():
    S = build_quotient_surface(2, 3, 1, 1, 2, 3)
    assert S.contains(-2, 1, -2)
    assert not S.contains(-2, 1, -1)
    S34 = build_quotient_surface(3, 4, 1, 1, 2, 3)
    assert S34.contains(-2, 1, -2)  # both sides 15
    # y = 0 slice: holds iff x^n + a x + b = 0
    assert S.contains(F(0), 0, 5) is False
    Sb = build_quotient_surface(2, 3, 0, -8, 1, 1)
    assert Sb.contains(2, 0, 5)  # 2^3 - 8 = 0


def test_fiber_t_examples():
    S = build_quotient_surface(2, 3, 1, 1, 2, 3)
    E, fm = fiber_t(S, -2)
    assert (E.A, E.B) == (81, -729) and fm.w == -9
    P = fm.to_curve(-2, 1)
    assert E.test(P.x, P.y)
    assert fm.from_curve(P) == (-2, 1)
    with pytest.raises(DegenerateFiberError):
        fiber_t(S, -1)  # f(-1) = 0
    P4 = TwistPencil(WeierstrassCurve(-4, 0), 4, F(0) + 1, F(1))
    E2, fm2 = fiber_t(P4, 0)
    assert (E2.A, E2.B) == (-4, 0) and fm2.w == 1  # twist by f(0) = 1
    with pytest.raises(InputError):
        fiber_t(build_quotient_surface(2, 4, 1, 1, 2, 3), 1)


def test_fiber_t_transport_random():
    rng = random.Random(4)
    S = build_quotient_surface(2, 3, 1, 1, 2, 3)
    found = 0
    while found < 30:
        t0 = F(rng.randint(-6, 6), rng.randint(1, 4))
        x = F(rng.randint(-6, 6), rng.randint(1, 4))
        w = t0 ** 3 + 2 * t0 + 3
        if w == 0:
            continue
        gx = x ** 3 + x + 1
        # fabricate a surface point by solving for y when gx/w is a square
        ratio = gx / w
        if ratio <= 0:
            continue
        num_r, den_r = ratio.numerator, ratio.denominator
        from math import isqrt
        rn, rd = isqrt(num_r), isqrt(den_r)
        if rn * rn != num_r or rd * rd != den_r:
            continue
        y = F(rn, rd)
        assert S.contains(x, y, t0)
        E, fm = fiber_t(S, t0)
        P = fm.to_curve(x, y)
        assert E.test(P.x, P.y)
        found += 1
    assert found == 30


def test_fiber_y_examples():
    S = build_quotient_surface(2, 3, 1, 1, 2, 3)
    C = fiber_y(S, 1)
    assert C.contains(fiber_y_point(-2, -2))
    assert cubic_is_smooth(C)
    # coefficients: x^3 + x + 1 - (t^3 + 2t + 3) homogenized
    assert C.coeffs[0] == 1 and C.coeffs[5] == 1 and C.coeffs[6] == -1
    assert C.coeffs[8] == -2 and C.coeffs[9] == 1 - 3
    with pytest.raises(InputError):
        fiber_y(S, 0)


CENSUS_CATALOG = [
    # (phi, psi): the affine real curve phi(x) = psi(t)
    ([F(0), F(-4), F(0), F(1)], [F(0), F(0), F(1)]),           # oval + branch: 2
    ([F(0), F(-4), F(0), F(1)], [F(0), F(0), F(-1)]),          # mirrored: 2
    ([F(1), F(1), F(0), F(1)], [F(0), F(0), F(1)]),            # one real root g: 1
    ([F(1), F(1), F(0), F(1)], [F(3), F(2), F(0), F(1)]),      # K_y fiber of K(1,1,2,3)
    ([F(0), F(-4), F(0), F(1)], [F(3), F(2), F(0), F(1)]),     # 3-root vs monotone
    ([F(0), F(-4), F(0), F(1)], [F(1), F(-3), F(0), F(1)]),    # two wiggly cubics
    ([F(0), F(-4), F(0), F(1)], [F(-15, 8), F(1), F(0), F(1)]),
    ([F(2), F(-4), F(0), F(1)], [F(0), F(0), F(2)]),           # shifted oval: 2
    ([F(0), F(-1), F(0), F(0), F(0), F(1)], [F(0), F(0), F(1)]),  # quintic x side
    ([F(1), F(2), F(0), F(1)], [F(0), F(-3), F(0), F(1)]),     # monotone vs 3-root
]


def test_census_matches_flood_fill_oracle():
    for phi, psi in CENSUS_CATALOG:
        got = real_component_census(SeparatedCurve(phi, psi)).count
        want = flood_fill_census(phi, psi)
        assert got == want, (phi, psi, got, want)


def test_census_oval_example():
    sc = SeparatedCurve([F(0), F(-4), F(0), F(1)], [F(0), F(0), F(1)])
    cen = real_component_census(sc)
    assert cen.count == 2
    lo, hi = cen.oval
    assert lo.cmp_rational(-2) == 0 and hi.cmp_rational(0) == 0
    assert oval_contains(cen, -1)
    assert not oval_contains(cen, 1)
    assert oval_contains(cen, -2)  # boundary root is on the oval
    assert oval_contains(cen, 0)


def test_census_from_fibers():
    S = build_quotient_surface(2, 3, 1, 1, 2, 3)
    assert real_component_census(SeparatedCurve.from_fiber_y(S, 1)).count == 1
    assert real_component_census(SeparatedCurve.from_fiber_t(S, 0)).count == 1
    S2 = build_quotient_surface(2, 3, -4, 0, 1, 1)  # g = x^3 - 4x
    cen = real_component_census(SeparatedCurve.from_fiber_t(S2, 1))  # f(1) = 3 > 0
    assert cen.count == 2
    lo, hi = cen.oval
    assert lo.cmp_rational(-2) == 0 and hi.cmp_rational(0) == 0


def test_census_rejects_singular():
    # x^4 - 2x^2 = t^2 has a singular point at the origin
    with pytest.raises(SingularCurveError):
        real_component_census(
            SeparatedCurve([F(0), F(0), F(-2), F(0), F(1)], [F(0), F(0), F(1)]))


def test_oval_requires_two_components():
    cen = real_component_census(SeparatedCurve([F(1), F(1), F(0), F(1)], [F(0), F(0), F(1)]))
    with pytest.raises(InputError):
        oval_contains(cen, 0)


def test_assumption_bounds_examples():
    g = [F(0), F(-4), F(0), F(1)]
    f4 = [F(1), F(1), F(0), F(0), F(1)]  # t^4 + t + 1
    assert assumption_bounds_check(g, f4, 0, 1) is True
    assert assumption_bounds_check(g, f4, 0, 2) is False
    assert assumption_bounds_check([F(1), F(1), F(0), F(1)], f4, 0, 99) is True  # vacuous


def test_assumption_bounds_is_three_root_condition():
    """The literal statement: true iff g(x) - f(t1) y0^2 has 3 distinct real roots."""
    rng = random.Random(6)
    g = [F(0), F(-4), F(0), F(1)]
    f4 = [F(1), F(1), F(0), F(0), F(1)]
    for _ in range(40):
        t1 = F(rng.randint(-4, 4), rng.randint(1, 3))
        y0 = F(rng.randint(1, 4), rng.randint(1, 3))
        level = (t1 ** 4 + t1 + 1) * y0 ** 2
        shifted = [g[0] - level] + g[1:]
        want = count_real_roots(shifted) == 3
        assert assumption_bounds_check(g, f4, t1, y0) == want

"""Group law, integral models, twists, and torsion certification."""

import random
from fractions import Fraction as F

import pytest

from kumfib.elliptic import (ECPoint, INF, WeierstrassCurve, ec_add, ec_mul,
                             ec_neg, quadratic_twist, to_integral_model,
                             torsion_test)
from kumfib.errors import InputError, NotOnCurveError
from oracles import brute_force_torsion


def curve_through(x, y, A):
    """y^2 = x^3 + Ax + B through (x, y) by solving for B."""
    return WeierstrassCurve(A, y * y - x ** 3 - A * x)


def random_point_curves(rng, count):
    out = []
    while len(out) < count:
        x = F(rng.randint(-8, 8), rng.randint(1, 4))
        y = F(rng.randint(1, 8), rng.randint(1, 4))
        A = F(rng.randint(-6, 6))
        try:
            E = curve_through(x, y, A)
        except InputError:
            continue
        out.append((E, ECPoint.of(x, y)))
    return out


def test_add_examples():
    E = WeierstrassCurve(0, 1)
    P = ECPoint.of(2, 3)
    assert ec_add(E, P, INF) == P
    assert ec_add(E, INF, P) == P
    assert ec_add(E, P, P) == ECPoint.of(0, 1)
    assert ec_add(E, ECPoint.of(0, 1), P) == ECPoint.of(-1, 0)


def test_add_rejects_off_curve():
    E = WeierstrassCurve(0, 1)
    with pytest.raises(NotOnCurveError):
        ec_add(E, ECPoint.of(5, 7), INF)


def test_singular_curve_rejected():
    with pytest.raises(InputError):
        WeierstrassCurve(-3, 2)  # disc = 0


def test_mul_examples():
    E = WeierstrassCurve(0, 1)
    P = ECPoint.of(2, 3)
    assert ec_mul(E, 0, P).is_infinity
    assert ec_mul(E, 6, P).is_infinity
    assert not ec_mul(E, 3, P).is_infinity
    assert ec_mul(E, -2, P) == ec_neg(ec_mul(E, 2, P))
    E2 = WeierstrassCurve(0, -2)
    assert ec_mul(E2, 2, ECPoint.of(3, 5)) == ECPoint.of(F(129, 100), F(-383, 1000))


def test_vertical_and_two_torsion():
    E = WeierstrassCurve(-4, 0)
    T = ECPoint.of(0, 0)
    assert ec_add(E, T, T).is_infinity
    Q = ECPoint.of(2, 0)
    assert ec_add(E, Q, ec_neg(Q)).is_infinity


def test_group_axioms_on_random_twists():
    """Associativity etc. over >= 200 random triples on twisted catalog curves.

    Twisting by s^2 keeps a rational point in reach: (x0, y0/s) solves
    s^2 y^2 = g(x0), and the transport map carries it onto the twist.
    """
    rng = random.Random(42)
    for _ in range(200):
        E0, P0 = random_point_curves(rng, 1)[0]
        s = F(rng.randint(1, 6), rng.randint(1, 3))
        E, m = quadratic_twist(E0, s * s)
        base = m.apply(P0.x, P0.y / s)
        assert E.test(base.x, base.y)
        A = ec_mul(E, rng.randint(-3, 3), base)
        B = ec_mul(E, rng.randint(-3, 3), base)
        C = ec_mul(E, rng.randint(-3, 3), base)
        assert ec_add(E, ec_add(E, A, B), C) == ec_add(E, A, ec_add(E, B, C))
        assert ec_add(E, A, B) == ec_add(E, B, A)
        assert ec_add(E, A, ec_neg(A)).is_infinity


def test_integral_model_examples():
    E, P, lam = to_integral_model(WeierstrassCurve(F(1, 4), 0), INF)
    assert (E.A, E.B, lam) == (4, 0, 2)
    E2, P2, lam2 = to_integral_model(WeierstrassCurve(0, F(1, 27)), INF)
    assert (E2.B, lam2) == (27, 3)
    E3, _, lam3 = to_integral_model(WeierstrassCurve(3, -2), INF)
    assert (E3.A, E3.B, lam3) == (3, -2, 1)


def test_integral_model_transports_points():
    E = WeierstrassCurve(F(1, 4), F(-23, 64))
    P = ECPoint.of(F(3, 4), F(1, 2))
    assert E.test(P.x, P.y)
    E2, P2, lam = to_integral_model(E, P)
    assert E2.A.denominator == 1 and E2.B.denominator == 1
    assert E2.test(P2.x, P2.y)
    assert P2.x == P.x * lam ** 2 and P2.y == P.y * lam ** 3


def test_quadratic_twist_examples():
    E, m = quadratic_twist(WeierstrassCurve(1, 1), -9)
    assert (E.A, E.B) == (81, -729)
    P = m.apply(-2, 1)
    assert P == ECPoint.of(18, 81)
    assert E.test(P.x, P.y)  # 81^2 = 18^3 + 81*18 - 729
    E1, _ = quadratic_twist(WeierstrassCurve(1, 1), 1)
    assert (E1.A, E1.B) == (1, 1)
    with pytest.raises(InputError):
        quadratic_twist(WeierstrassCurve(1, 1), 0)


def test_twist_functoriality():
    """Twisting by q then q' lands on the twist by q q' exactly.

    With the model Y^2 = X^3 + q^2 A X + q^3 B the composite of two twists is
    literally the twist by the product, so the "up to rescaling by (q q')"
    isomorphism of the general statement is the identity here; point
    transport is checked by apply/unapply round trips.
    """
    rng = random.Random(9)
    for _ in range(40):
        E0, P0 = random_point_curves(rng, 1)[0]
        q1 = F(rng.randint(1, 7), rng.randint(1, 4)) * rng.choice([1, -1])
        q2 = F(rng.randint(1, 7), rng.randint(1, 4)) * rng.choice([1, -1])
        Ea, ma = quadratic_twist(E0, q1 * q2)
        Eb1, _ = quadratic_twist(E0, q1)
        Eb2, _ = quadratic_twist(Eb1, q2)
        assert (Eb2.A, Eb2.B) == (Ea.A, Ea.B)
        xx, yy = ma.unapply(ma.apply(P0.x, P0.y))
        assert (xx, yy) == (P0.x, P0.y)
        # and a genuine transported solution: s^2-twist of a curve point
        s = F(rng.randint(1, 5))
        Es, ms = quadratic_twist(E0, s * s)
        Ps = ms.apply(P0.x, P0.y / s)
        assert Es.test(Ps.x, Ps.y)


def test_torsion_examples():
    v = torsion_test(WeierstrassCurve(0, 1), ECPoint.of(2, 3))
    assert v.is_torsion and v.order == 6
    v2 = torsion_test(WeierstrassCurve(0, -2), ECPoint.of(3, 5))
    assert not v2.is_torsion and v2.method == "lutz-nagell"
    v3 = torsion_test(WeierstrassCurve(-4, 0), ECPoint.of(0, 0))
    assert v3.is_torsion and v3.order == 2
    with pytest.raises(InputError):
        torsion_test(WeierstrassCurve(0, 1), INF)


def test_torsion_verdict_implies_multiples():
    E = WeierstrassCurve(0, 1)
    P = ECPoint.of(2, 3)
    v = torsion_test(E, P)
    assert ec_mul(E, v.order, P).is_infinity
    for m in range(1, v.order):
        assert not ec_mul(E, m, P).is_infinity


TORSION_CATALOG = [
    (WeierstrassCurve(0, 1), ECPoint.of(2, 3)),          # order 6
    (WeierstrassCurve(0, 1), ECPoint.of(0, 1)),          # order 3
    (WeierstrassCurve(0, 1), ECPoint.of(-1, 0)),         # order 2
    (WeierstrassCurve(-4, 0), ECPoint.of(0, 0)),         # order 2
    (WeierstrassCurve(-4, 0), ECPoint.of(2, 0)),         # order 2
    (WeierstrassCurve(0, -2), ECPoint.of(3, 5)),         # non-torsion
    (WeierstrassCurve(-2, 0), ECPoint.of(-1, 1)),        # non-torsion (y^2 = x^3-2x)
    (WeierstrassCurve(0, 4), ECPoint.of(0, 2)),          # order 3
    (WeierstrassCurve(4, 0), ECPoint.of(2, 4)),          # order 4
    (WeierstrassCurve(0, F(1, 64)), ECPoint.of(0, F(1, 8))),  # order 3 after scaling
]


def test_torsion_agrees_with_brute_force_oracle():
    rng = random.Random(77)
    catalog = list(TORSION_CATALOG) + random_point_curves(rng, 20)
    assert len(catalog) >= 30
    for E, P in catalog:
        fast = torsion_test(E, P)
        slow_torsion, slow_order = brute_force_torsion(E, P)
        assert fast.is_torsion == slow_torsion, (E, P)
        if slow_torsion:
            assert fast.order == slow_order

"""Chord-tangent process: geometry examples, group-law oracle, torsion walk."""

import random
from fractions import Fraction as F

import pytest

from kumfib.cubic import (ChordTorsionVerdict, PlaneCubic, ProjPoint, chord,
                          chord_sequence, chord_torsion_test, cubic_is_smooth,
                          embed_point, from_weierstrass, to_ec_point)
from kumfib.elliptic import ECPoint, WeierstrassCurve, ec_add, ec_mul, ec_neg, torsion_test
from kumfib.errors import InputError, NotOnCurveError


def test_proj_point_normalization():
    assert ProjPoint(2, 4, 2) == ProjPoint(1, 2, 1)
    assert ProjPoint(3, 6, 0) == ProjPoint(F(1, 2), 1, 0)
    assert ProjPoint(5, 0, 0) == ProjPoint(1, 0, 0)
    with pytest.raises(InputError):
        ProjPoint(0, 0, 0)


def test_smoothness_examples():
    assert cubic_is_smooth(from_weierstrass(WeierstrassCurve(-1, 0)))
    cusp = PlaneCubic([-1, 0, 0, 0, 0, 0, 0, 1, 0, 0])  # Y^2 Z - X^3
    assert not cubic_is_smooth(cusp)
    fermat = PlaneCubic([1, 0, 0, 0, 0, 0, 1, 0, 0, 1])
    assert cubic_is_smooth(fermat)
    # y^2 z = x^3 - 3xz^2 + 2z^3: the right side has a double root, nodal
    nodal = PlaneCubic([-1, 0, 0, 0, 0, 3, 0, 1, 0, -2])
    assert not cubic_is_smooth(nodal)


def test_chord_examples():
    C = from_weierstrass(WeierstrassCurve(-1, 0))  # Y^2 Z = X^3 - X Z^2
    A, B = ProjPoint(0, 0, 1), ProjPoint(1, 0, 1)
    assert chord(C, A, B) == ProjPoint(-1, 0, 1)
    T = chord(C, A, A)
    assert T == ProjPoint(0, 1, 0)
    assert chord(C, A, T) == A
    with pytest.raises(NotOnCurveError):
        chord(C, ProjPoint(5, 5, 1), A)


def test_chord_symmetry_and_involution():
    rng = random.Random(13)
    done = 0
    while done < 100:
        x1, y1 = F(rng.randint(-5, 5)), F(rng.randint(1, 5))
        A = F(rng.randint(-4, 4))
        B = y1 * y1 - x1 ** 3 - A * x1
        if -16 * (4 * A ** 3 + 27 * B ** 2) == 0:
            continue
        E = WeierstrassCurve(A, B)
        C = from_weierstrass(E)
        P1 = embed_point(ECPoint.of(x1, y1))
        P2 = embed_point(ec_mul(E, rng.randint(2, 4), ECPoint.of(x1, y1)))
        if P1 == P2:
            continue
        ch = chord(C, P1, P2)
        assert ch == chord(C, P2, P1)
        assert chord(C, ch, P2) == P1
        # equivalence with the group law: chord(A,B) = -(A + B)
        ea, eb = to_ec_point(P1), to_ec_point(P2)
        assert ch == embed_point(ec_neg(ec_add(E, ea, eb)))
        done += 1


def test_chord_sequence_examples():
    C = from_weierstrass(WeierstrassCurve(-1, 0))
    P = ProjPoint(0, 0, 1)  # 2-torsion
    assert chord_sequence(C, P, 0) == [P]
    seq = chord_sequence(C, P, 2)
    assert seq[1] == ProjPoint(0, 1, 0)  # 4P = O at the flex
    assert seq[2] == P

    E = WeierstrassCurve(0, 1)
    P2 = ECPoint.of(2, 3)
    C2 = from_weierstrass(E)
    seq2 = chord_sequence(C2, embed_point(P2), 5)
    for n, q in enumerate(seq2):
        assert q == embed_point(ec_mul(E, 3 * n + 1, P2))


def test_chord_sequence_reverse_consistency():
    """Forward steps verified against the backward recurrence (built in)."""
    E = WeierstrassCurve(0, -2)
    C = from_weierstrass(E)
    seq = chord_sequence(C, embed_point(ECPoint.of(3, 5)), 4, verify=True)
    assert len(seq) == 5
    for n, q in enumerate(seq):
        assert q == embed_point(ec_mul(E, 3 * n + 1, ECPoint.of(3, 5)))


def test_chord_torsion_examples():
    C1 = from_weierstrass(WeierstrassCurve(-1, 0))
    v = chord_torsion_test(C1, ProjPoint(0, 0, 1))
    assert v.is_torsion_class and v.period == 2

    E = WeierstrassCurve(0, 1)
    v2 = chord_torsion_test(from_weierstrass(E), embed_point(ECPoint.of(2, 3)))
    assert v2.is_torsion_class and v2.period == 2  # J = 3P has order 2

    E3 = WeierstrassCurve(0, -2)
    v3 = chord_torsion_test(from_weierstrass(E3), embed_point(ECPoint.of(3, 5)))
    assert not v3.is_torsion_class
    assert len(set(v3.points)) == 13


def test_chord_torsion_agrees_with_group_law():
    """NonTorsionClass iff the class point 3P is non-torsion (exactly)."""
    rng = random.Random(31)
    done = 0
    while done < 25:
        x1, y1 = F(rng.randint(-4, 4)), F(rng.randint(1, 4))
        A = F(rng.randint(-4, 4))
        B = y1 * y1 - x1 ** 3 - A * x1
        if -16 * (4 * A ** 3 + 27 * B ** 2) == 0:
            continue
        E = WeierstrassCurve(A, B)
        P = ECPoint.of(x1, y1)
        v = chord_torsion_test(from_weierstrass(E), embed_point(P))
        J = ec_mul(E, 3, P)
        if J.is_infinity:
            assert v.is_torsion_class and v.period == 1
        else:
            w = torsion_test(E, J)
            assert v.is_torsion_class == w.is_torsion
            if w.is_torsion:
                assert v.period == w.order
        done += 1


def test_nonweierstrass_cubic_chords():
    # Fermat cubic X^3 + Y^3 + Z^3 with the rational point (1 : -1 : 0)
    C = PlaneCubic([1, 0, 0, 0, 0, 0, 1, 0, 0, 1])
    P = ProjPoint(1, -1, 0)
    assert C.contains(P)
    T = chord(C, P, P)
    assert C.contains(T)
    seq = chord_sequence(C, P, 3)
    for q in seq:
        assert C.contains(q)
    v = chord_torsion_test(C, P)
    assert v.is_torsion_class  # flex point: J = 3[P] - H = 0
    assert v.period == 1

"""Root isolation, refinement, and real algebraic number comparisons."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from kumfib.errors import InputError
from kumfib.realroots import (RealRoot, RootBox, count_real_roots,
                              isolate_real_roots, poly_sign_at, refine_box)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=40)


def test_isolate_examples():
    boxes = isolate_real_roots([F(0), F(-4), F(0), F(1)])  # x^3 - 4x
    assert len(boxes) == 3
    for b, r in zip(boxes, (-2, 0, 2)):
        assert b.low < r <= b.high
        assert b.simple
    assert len(isolate_real_roots([F(1), F(1), F(0), F(1)])) == 1      # x^3+x+1
    assert len(isolate_real_roots([F(1), F(1), F(0), F(0), F(1)])) == 0  # t^4+t+1


def test_isolate_rejects_zero():
    with pytest.raises(InputError):
        isolate_real_roots([F(0)])


def test_isolate_boxes_disjoint_and_ordered():
    boxes = isolate_real_roots([F(6), F(-5), F(-2), F(1)])  # (x-1)(x-3)(x+2)
    assert [b.exact for b in boxes].count(True) >= 0
    for b1, b2 in zip(boxes, boxes[1:]):
        assert b1.high <= b2.low


def test_sign_examples():
    p = [F(0), F(-4), F(0), F(1)]
    assert poly_sign_at(p, F(1)) == -1
    assert poly_sign_at(p, F(0)) == 0
    assert poly_sign_at([F(1), F(1), F(0), F(0), F(1)], F(-1)) == 1


@settings(max_examples=80, deadline=None)
@given(st.lists(rationals, min_size=1, max_size=7), rationals)
def test_sign_agrees_with_exact_evaluation(coeffs, q):
    if all(c == 0 for c in coeffs):
        return
    val = sum(c * q ** i for i, c in enumerate(coeffs))
    assert poly_sign_at(coeffs, q) == (val > 0) - (val < 0)


def test_refine_examples():
    p = [F(0), F(-4), F(0), F(1)]
    box = next(b for b in isolate_real_roots(p) if b.low < 2 <= b.high)
    out = refine_box(p, box, F(1, 100))
    assert out.width() < F(1, 100) and out.low < 2 <= out.high
    assert F(199, 100) < out.low and out.high <= F(201, 100)

    q = [F(-2), F(0), F(1)]
    out2 = refine_box(q, RootBox(F(1), F(2)), F(1, 8))
    assert out2.width() < F(1, 8)
    # sqrt(2) stays inside
    assert out2.low ** 2 < 2 < out2.high ** 2

    # width >= current width is a no-op
    b3 = RootBox(F(1), F(2))
    assert refine_box(q, b3, F(5)) == b3


def test_refine_preserves_single_root_count():
    p = [F(-1), F(-3), F(0), F(1)]  # three real roots
    for box in isolate_real_roots(p):
        out = refine_box(p, box, F(1, 512))
        assert count_real_roots(p, out.low, out.high) == 1


def test_count_real_roots_ranges():
    p = [F(0), F(-4), F(0), F(1)]
    assert count_real_roots(p) == 3
    assert count_real_roots(p, F(-1), F(5)) == 2  # roots 0, 2 in (-1, 5]
    assert count_real_roots(p, F(0), F(5)) == 1   # half-open excludes 0


def test_realroot_comparisons():
    p = [F(0), F(-4), F(0), F(1)]
    roots = RealRoot.roots_of(p)
    assert [r.cmp_rational(0) for r in roots] == [-1, 0, 1]
    assert roots[1].exact == 0
    sqrt2 = RealRoot.roots_of([F(-2), F(0), F(1)])[1]
    assert sqrt2.cmp(roots[2]) < 0       # sqrt2 < 2
    assert sqrt2.cmp(roots[1]) > 0       # sqrt2 > 0
    same = RealRoot.roots_of([F(-2), F(0), F(1)])[1]
    assert sqrt2.cmp(same) == 0          # equal algebraic numbers
    # sqrt2 as a root of a different polynomial (x^4 - 4)
    other = RealRoot.roots_of([F(-4), F(0), F(0), F(0), F(1)])[1]
    assert sqrt2.cmp(other) == 0


def test_realroot_sign_of():
    sqrt2 = RealRoot.roots_of([F(-2), F(0), F(1)])[1]
    assert sqrt2.sign_of([F(-2), F(0), F(1)]) == 0
    assert sqrt2.sign_of([F(0), F(1)]) == 1
    assert sqrt2.sign_of([F(-3), F(0), F(1)]) == -1  # 2 - 3 < 0
    assert sqrt2.sign_of([F(-1), F(0), F(1)]) == 1

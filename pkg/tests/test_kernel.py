"""Kernel twins must agree exactly, and Sturm counts must match factorizations."""

import random
from fractions import Fraction

import pytest

from kumfib._kernel import pure

try:
    from kumfib._kernel import _speedups
    IMPLS = [pure, _speedups]
except ImportError:  # extension not built; pure fallback only
    _speedups = None
    IMPLS = [pure]


def rand_poly(rng, max_deg=8, coeff=60):
    return pure.norm(tuple(rng.randint(-coeff, coeff) for _ in range(rng.randint(1, max_deg + 1))))


@pytest.mark.skipif(_speedups is None, reason="compiled kernel not built")
def test_twin_agreement():
    rng = random.Random(20240917)
    for _ in range(500):
        f, g = rand_poly(rng), rand_poly(rng)
        if not f or not g:
            continue
        assert pure.add(f, g) == _speedups.add(f, g)
        assert pure.sub(f, g) == _speedups.sub(f, g)
        assert pure.mul(f, g) == _speedups.mul(f, g)
        assert pure.gcd_poly(f, g) == _speedups.gcd_poly(f, g)
        sf = pure.squarefree(f)
        assert sf == _speedups.squarefree(f)
        c1, c2 = pure.sturm_chain(sf), _speedups.sturm_chain(sf)
        assert c1 == c2
        assert pure.isolate(sf, c1) == _speedups.isolate(sf, c2)
        n, d = rng.randint(-99, 99), rng.randint(1, 99)
        assert pure.sign_at(f, n, d) == _speedups.sign_at(f, n, d)
        assert pure.eval_scaled(f, n, d) == _speedups.eval_scaled(f, n, d)


@pytest.mark.parametrize("K", IMPLS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_sturm_count_matches_linear_factor_products(K):
    """Products of random linear factors: total real-root count is known."""
    rng = random.Random(7)
    for _ in range(60):
        roots = sorted(set(rng.randint(-8, 8) for _ in range(rng.randint(1, 5))))
        f = (1,)
        for r in roots:
            f = K.mul(f, (-r, 1))
        # optionally square one factor; distinct count must not change
        if rng.random() < 0.5:
            f = K.mul(f, (-roots[0], 1))
        sf = K.squarefree(f)
        chain = K.sturm_chain(sf)
        H = K.cauchy_bound(sf)
        assert K.count_between(chain, (-H, 1), (H, 1)) == len(roots)
        boxes = K.isolate(sf, chain)
        assert len(boxes) == len(roots)
        for (ln, ld, hn, hd), r in zip(boxes, roots):
            assert Fraction(ln, ld) < r <= Fraction(hn, hd)


@pytest.mark.parametrize("K", IMPLS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_exact_div_and_prem(K):
    rng = random.Random(11)
    for _ in range(80):
        f, g = rand_poly(rng, 5, 9), rand_poly(rng, 4, 9)
        if not f or not g:
            continue
        assert K.exact_div(K.mul(f, g), g) == f
        if len(f) >= len(g):
            r = K.prem(f, g)
            assert len(r) < len(g) or not r


@pytest.mark.parametrize("K", IMPLS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_refine_keeps_single_root(K):
    f = (-2, 0, 1)  # x^2 - 2
    chain = K.sturm_chain(f)
    box = (1, 1, 2, 1)
    out = K.refine(list(chain), box, 1, 1024)
    ln, ld, hn, hd = out
    lo, hi = Fraction(ln, ld), Fraction(hn, hd)
    assert hi - lo < Fraction(1, 1024)
    assert K.count_between(chain, (ln, ld), (hn, hd)) == 1

"""Pure-Python kernel: dense univariate integer polynomials and Sturm machinery.

This is the hot path of the whole package: every root isolation, box
refinement, census band count and density search bottoms out in the
functions here.  A Cython twin (_speedups.pyx) implements the same API; the
package selects one at import time (see _kernel/__init__.py).

Representation: a polynomial is a tuple of Python ints, lowest degree first,
with no trailing zeros.  The zero polynomial is the empty tuple.  Rationals
enter only as (num, den) pairs with den > 0; all arithmetic stays in Z.

Sturm chains are built with signed pseudo-remainders so every step is an
integer polynomial equal to the classical -rem(...) up to a positive
constant, which is exactly what Sturm's theorem needs.
"""

from fractions import Fraction
from math import gcd


def norm(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def add(f, g):
    n = max(len(f), len(g))
    return norm([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)
                 for i in range(n)])


def neg(f):
    return tuple(-a for a in f)


def sub(f, g):
    n = max(len(f), len(g))
    return norm([(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)
                 for i in range(n)])


def mul(f, g):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return norm(out)


def scale(f, k):
    if k == 0:
        return ()
    return tuple(a * k for a in f)


def deriv(f):
    return tuple(i * f[i] for i in range(1, len(f)))


def content(f):
    g = 0
    for a in f:
        g = gcd(g, a)
        if g == 1:
            return 1
    return g


def primitive(f):
    """Divide out the (positive) content; keeps the sign of the leading term."""
    if not f:
        return ()
    c = content(f)
    if c == 1:
        return tuple(f)
    return tuple(a // c for a in f)


def eval_scaled(f, n, d):
    """d^deg(f) * f(n/d) as an exact integer (d > 0, so signs are faithful)."""
    if not f:
        return 0
    acc = f[-1]
    dd = 1
    for i in range(len(f) - 2, -1, -1):
        dd *= d
        acc = acc * n + f[i] * dd
    return acc


def sign_at(f, n, d):
    v = eval_scaled(f, n, d)
    return (v > 0) - (v < 0)


def sign_at_inf(f, s):
    """Sign of f at +inf (s=+1) or -inf (s=-1)."""
    if not f:
        return 0
    lc = f[-1]
    if s > 0 or (len(f) - 1) % 2 == 0:
        return (lc > 0) - (lc < 0)
    return (lc < 0) - (lc > 0)


def prem(f, g):
    """Pseudo-remainder: rem(lc(g)^(deg f - deg g + 1) * f, g), exact over Z."""
    dg = len(g) - 1
    lcg = g[-1]
    e = len(f) - len(g) + 1
    r = list(f)
    while len(r) - 1 >= dg and r:
        lead = r[-1]
        shift = len(r) - 1 - dg
        r = [a * lcg for a in r]
        for j in range(dg + 1):
            r[shift + j] -= lead * g[j]
        while r and r[-1] == 0:
            r.pop()
        e -= 1
    if e > 0:
        m = lcg ** e
        r = [a * m for a in r]
    return tuple(r)


def exact_div(f, g):
    """Quotient f/g when g divides f over Z (long division, remainder checked)."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if not f:
        return ()
    r = list(f)
    dg = len(g) - 1
    lcg = g[-1]
    q = [0] * (len(f) - len(g) + 1)
    while r and len(r) - 1 >= dg:
        lead = r[-1]
        if lead % lcg != 0:
            raise ArithmeticError("inexact polynomial division")
        coef = lead // lcg
        shift = len(r) - 1 - dg
        q[shift] = coef
        for j in range(dg + 1):
            r[shift + j] -= coef * g[j]
        while r and r[-1] == 0:
            r.pop()
    if r:
        raise ArithmeticError("inexact polynomial division")
    return norm(q)


def gcd_poly(f, g):
    """Primitive gcd over Z with positive leading coefficient (primitive PRS)."""
    f, g = primitive(f), primitive(g)
    if not f:
        a = g
    elif not g:
        a = f
    else:
        if len(f) < len(g):
            f, g = g, f
        while g:
            r = primitive(prem(f, g))
            f, g = g, r
        a = f
    if a and a[-1] < 0:
        a = neg(a)
    return a


def squarefree(f):
    """Primitive squarefree part (same real roots, all simple)."""
    if not f:
        return ()
    if len(f) == 1:
        return (1,)
    g = gcd_poly(f, deriv(f))
    if len(g) == 1:
        sf = primitive(f)
    else:
        sf = primitive(exact_div(primitive(f), g))
    if sf[-1] < 0:
        sf = neg(sf)
    return sf


def sturm_chain(f):
    """Sturm chain of a squarefree polynomial (content-reduced at each step)."""
    chain = [tuple(f)]
    d = deriv(f)
    if d:
        chain.append(primitive(d))
    while len(chain) >= 2 and len(chain[-1]) > 1:
        a, b = chain[-2], chain[-1]
        r = prem(a, b)
        if not r:
            break
        # prem multiplied the dividend by lc(b)^(delta+1); flip so the new
        # element is -rem(a, b) times a positive constant.  lc(b)^(delta+1)
        # is positive iff lc(b) > 0 or delta+1 is even.
        delta = len(a) - len(b)
        if b[-1] > 0 or delta % 2 == 1:
            r = neg(r)
        chain.append(primitive(r))
    return chain


def variations(chain, n, d):
    last = 0
    count = 0
    for f in chain:
        s = sign_at(f, n, d)
        if s != 0:
            if last != 0 and s != last:
                count += 1
            last = s
    return count


def variations_inf(chain, sgn):
    last = 0
    count = 0
    for f in chain:
        s = sign_at_inf(f, sgn)
        if s != 0:
            if last != 0 and s != last:
                count += 1
            last = s
    return count


def count_between(chain, lo, hi):
    """Number of distinct real roots in (lo, hi]; None endpoints mean -/+inf."""
    va = variations_inf(chain, -1) if lo is None else variations(chain, lo[0], lo[1])
    vb = variations_inf(chain, +1) if hi is None else variations(chain, hi[0], hi[1])
    return va - vb


def cauchy_bound(f):
    """Integer H with every real root of f in the open interval (-H, H)."""
    lc = abs(f[-1])
    m = 0
    for a in f[:-1]:
        if abs(a) > m:
            m = abs(a)
    return m // lc + 2


def _mid(ln, ld, hn, hd):
    n = ln * hd + hn * ld
    d = 2 * ld * hd
    g = gcd(n, d)
    if g > 1:
        n //= g
        d //= g
    return n, d


def isolate(sf, chain):
    """Isolating boxes (lo, hi] for all real roots of a squarefree polynomial.

    Returns a list of (lon, lod, hin, hid) tuples, disjoint and ordered.
    Left endpoints are never roots (they are shrunk off by a bisection step
    if the midpoint happens to hit a root exactly); a right endpoint equals
    the root only when the root is rational and was hit exactly.
    """
    if len(sf) <= 1:
        return []
    H = cauchy_bound(sf)
    out = []
    stack = [(-H, 1, H, 1, count_between(chain, (-H, 1), (H, 1)))]
    while stack:
        ln, ld, hn, hd, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            out.append((ln, ld, hn, hd))
            continue
        mn, md = _mid(ln, ld, hn, hd)
        kl = count_between(chain, (ln, ld), (mn, md))
        stack.append((ln, ld, mn, md, kl))
        stack.append((mn, md, hn, hd, k - kl))
    out.sort(key=lambda b: Fraction(b[0], b[1]))
    # shrink any box whose left endpoint is a root of sf (it is not the boxed
    # root, but a neighbouring one sitting exactly on the fence)
    fixed = []
    for ln, ld, hn, hd in out:
        while sign_at(sf, ln, ld) == 0:
            mn, md = _mid(ln, ld, hn, hd)
            if count_between(chain, (mn, md), (hn, hd)) == 1:
                ln, ld = mn, md
            else:
                # the root lies in (ln, mn]; move the right endpoint instead
                hn, hd = mn, md
        fixed.append((ln, ld, hn, hd))
    return fixed


def refine(chain, box, wn, wd):
    """Bisect (lo, hi] down to width < wn/wd, keeping exactly one root inside."""
    ln, ld, hn, hd = box
    while (hn * ld - ln * hd) * wd >= wn * ld * hd:
        mn, md = _mid(ln, ld, hn, hd)
        if count_between(chain, (ln, ld), (mn, md)) == 1:
            hn, hd = mn, md
        else:
            ln, ld = mn, md
    return (ln, ld, hn, hd)

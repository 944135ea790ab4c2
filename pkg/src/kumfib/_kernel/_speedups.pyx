# cython: language_level=3
"""Compiled kernel: same API as kumfib._kernel.pure.

Coefficients stay arbitrary-precision Python ints; the win over the pure
module is the loop and call overhead in pseudo-division, Horner evaluation
and sign-variation counting, which are executed millions of times during
isolation/refinement sweeps.  Semantics must match pure.py exactly: the test
suite runs the two implementations against each other.
"""

from fractions import Fraction
from math import gcd


def norm(c):
    cdef list out = list(c)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def add(f, g):
    cdef Py_ssize_t i, nf = len(f), ng = len(g), n = nf if nf > ng else ng
    cdef list out = [0] * n
    for i in range(n):
        out[i] = (f[i] if i < nf else 0) + (g[i] if i < ng else 0)
    return norm(out)


def neg(f):
    return tuple(-a for a in f)


def sub(f, g):
    cdef Py_ssize_t i, nf = len(f), ng = len(g), n = nf if nf > ng else ng
    cdef list out = [0] * n
    for i in range(n):
        out[i] = (f[i] if i < nf else 0) - (g[i] if i < ng else 0)
    return norm(out)


def mul(f, g):
    cdef Py_ssize_t i, j, nf = len(f), ng = len(g)
    if nf == 0 or ng == 0:
        return ()
    cdef list out = [0] * (nf + ng - 1)
    for i in range(nf):
        a = f[i]
        if a:
            for j in range(ng):
                out[i + j] = out[i + j] + a * g[j]
    return norm(out)


def scale(f, k):
    if k == 0:
        return ()
    return tuple(a * k for a in f)


def deriv(f):
    cdef Py_ssize_t i
    return tuple(i * f[i] for i in range(1, len(f)))


def content(f):
    g = 0
    for a in f:
        g = gcd(g, a)
        if g == 1:
            return 1
    return g


def primitive(f):
    if not f:
        return ()
    c = content(f)
    if c == 1:
        return tuple(f)
    return tuple(a // c for a in f)


def eval_scaled(f, n, d):
    cdef Py_ssize_t i, nf = len(f)
    if nf == 0:
        return 0
    acc = f[nf - 1]
    dd = 1
    for i in range(nf - 2, -1, -1):
        dd = dd * d
        acc = acc * n + f[i] * dd
    return acc


def sign_at(f, n, d):
    v = eval_scaled(f, n, d)
    return (v > 0) - (v < 0)


def sign_at_inf(f, s):
    if not f:
        return 0
    lc = f[len(f) - 1]
    if s > 0 or (len(f) - 1) % 2 == 0:
        return (lc > 0) - (lc < 0)
    return (lc < 0) - (lc > 0)


def prem(f, g):
    cdef Py_ssize_t dg = len(g) - 1, shift, j, nr
    cdef Py_ssize_t e = len(f) - len(g) + 1
    lcg = g[dg]
    cdef list r = list(f)
    while len(r) - 1 >= dg and r:
        nr = len(r)
        lead = r[nr - 1]
        shift = nr - 1 - dg
        for j in range(nr):
            r[j] = r[j] * lcg
        for j in range(dg + 1):
            r[shift + j] = r[shift + j] - lead * g[j]
        while r and r[len(r) - 1] == 0:
            r.pop()
        e -= 1
    if e > 0:
        m = lcg ** e
        for j in range(len(r)):
            r[j] = r[j] * m
    return tuple(r)


def exact_div(f, g):
    cdef Py_ssize_t dg, shift, j
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if not f:
        return ()
    cdef list r = list(f)
    dg = len(g) - 1
    lcg = g[dg]
    cdef list q = [0] * (len(f) - len(g) + 1)
    while r and len(r) - 1 >= dg:
        lead = r[len(r) - 1]
        if lead % lcg != 0:
            raise ArithmeticError("inexact polynomial division")
        coef = lead // lcg
        shift = len(r) - 1 - dg
        q[shift] = coef
        for j in range(dg + 1):
            r[shift + j] = r[shift + j] - coef * g[j]
        while r and r[len(r) - 1] == 0:
            r.pop()
    if r:
        raise ArithmeticError("inexact polynomial division")
    return norm(q)


def gcd_poly(f, g):
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
    if a and a[len(a) - 1] < 0:
        a = neg(a)
    return a


def squarefree(f):
    if not f:
        return ()
    if len(f) == 1:
        return (1,)
    g = gcd_poly(f, deriv(f))
    if len(g) == 1:
        sf = primitive(f)
    else:
        sf = primitive(exact_div(primitive(f), g))
    if sf[len(sf) - 1] < 0:
        sf = neg(sf)
    return sf


def sturm_chain(f):
    cdef list chain = [tuple(f)]
    cdef Py_ssize_t delta
    d = deriv(f)
    if d:
        chain.append(primitive(d))
    while len(chain) >= 2 and len(chain[-1]) > 1:
        a, b = chain[-2], chain[-1]
        r = prem(a, b)
        if not r:
            break
        delta = len(a) - len(b)
        if b[len(b) - 1] > 0 or delta % 2 == 1:
            r = neg(r)
        chain.append(primitive(r))
    return chain


def variations(chain, n, d):
    cdef int last = 0, count = 0, s
    for f in chain:
        s = sign_at(f, n, d)
        if s != 0:
            if last != 0 and s != last:
                count += 1
            last = s
    return count


def variations_inf(chain, sgn):
    cdef int last = 0, count = 0, s
    for f in chain:
        s = sign_at_inf(f, sgn)
        if s != 0:
            if last != 0 and s != last:
                count += 1
            last = s
    return count


def count_between(chain, lo, hi):
    cdef int va, vb
    va = variations_inf(chain, -1) if lo is None else variations(chain, lo[0], lo[1])
    vb = variations_inf(chain, +1) if hi is None else variations(chain, hi[0], hi[1])
    return va - vb


def cauchy_bound(f):
    lc = abs(f[len(f) - 1])
    m = 0
    for a in f[:len(f) - 1]:
        if abs(a) > m:
            m = abs(a)
    return m // lc + 2


cdef _mid(ln, ld, hn, hd):
    n = ln * hd + hn * ld
    d = 2 * ld * hd
    g = gcd(n, d)
    if g > 1:
        n //= g
        d //= g
    return n, d


def isolate(sf, chain):
    cdef int k, kl
    if len(sf) <= 1:
        return []
    H = cauchy_bound(sf)
    cdef list out = []
    cdef list stack = [(-H, 1, H, 1, count_between(chain, (-H, 1), (H, 1)))]
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
    cdef list fixed = []
    for box in out:
        ln, ld, hn, hd = box
        while sign_at(sf, ln, ld) == 0:
            mn, md = _mid(ln, ld, hn, hd)
            if count_between(chain, (mn, md), (hn, hd)) == 1:
                ln, ld = mn, md
            else:
                hn, hd = mn, md
        fixed.append((ln, ld, hn, hd))
    return fixed


def refine(chain, box, wn, wd):
    ln, ld, hn, hd = box
    while (hn * ld - ln * hd) * wd >= wn * ld * hd:
        mn, md = _mid(ln, ld, hn, hd)
        if count_between(chain, (ln, ld), (mn, md)) == 1:
            hn, hd = mn, md
        else:
            ln, ld = mn, md
    return (ln, ld, hn, hd)

"""Multivariate polynomials and rational functions over the rationals.

The variable universe is fixed and ordered: a, b, c, d, u, x, y, t, X, Y, Z.
Internally every exponent vector has length 11; the public face (variables(),
serialization) trims to the variables actually present.  The canonical
monomial order is graded lexicographic over that fixed variable order, which
makes leading terms, sign normalization and equality checks deterministic.

RatFunc keeps num/den reduced (gcd divided out, computed by primitive
pseudo-remainder sequences) with the denominator normalized to coprime
integer coefficients and positive grlex-leading coefficient.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd, lcm
from typing import Iterable, Mapping

from .errors import InputError
from .qmath import Rat, rat_str

VARS = ("a", "b", "c", "d", "u", "x", "y", "t", "X", "Y", "Z")
NVARS = len(VARS)
_VAR_INDEX = {v: i for i, v in enumerate(VARS)}
_ZERO_EXP = (0,) * NVARS


def _grlex_key(exp):
    return (sum(exp), exp)


class MPoly:
    """Sparse multivariate polynomial with exact rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, Rat] | None = None):
        t = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c:
                    t[tuple(e)] = c
        self.terms = t

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero() -> "MPoly":
        return MPoly()

    @staticmethod
    def const(q) -> "MPoly":
        q = Fraction(q)
        return MPoly({_ZERO_EXP: q}) if q else MPoly()

    @staticmethod
    def var(name: str, power: int = 1) -> "MPoly":
        if name not in _VAR_INDEX:
            raise InputError(f"unknown variable {name!r}")
        e = [0] * NVARS
        e[_VAR_INDEX[name]] = power
        return MPoly({tuple(e): Fraction(1)})

    # -- structure -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def variables(self) -> list[str]:
        present = [False] * NVARS
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    present[i] = True
        return [VARS[i] for i in range(NVARS) if present[i]]

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        i = _VAR_INDEX[name]
        return max((e[i] for e in self.terms), default=-1)

    def leading(self):
        """(exponent, coefficient) of the grlex-leading term; None when zero."""
        if not self.terms:
            return None
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def constant_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1 and _ZERO_EXP in self.terms:
            return self.terms[_ZERO_EXP]
        raise InputError("polynomial is not constant")

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        r = MPoly.__new__(MPoly)
        r.terms = out
        return r

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        r = MPoly.__new__(MPoly)
        r.terms = {e: -c for e, c in self.terms.items()}
        return r

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(map(sum, zip(e1, e2)))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        r = MPoly.__new__(MPoly)
        r.terms = out
        return r

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        if n < 0:
            raise InputError("negative power of a polynomial")
        result = MPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, (MPoly, int, Fraction)):
            return NotImplemented
        return self.terms == _coerce(other).terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- evaluation and substitution --------------------------------------

    def evaluate(self, assignment: Mapping[str, Rat]) -> Fraction:
        """Full evaluation; every variable present must be assigned."""
        vals = {}
        for v in self.variables():
            if v not in assignment:
                raise InputError(f"missing value for variable {v!r}")
            vals[_VAR_INDEX[v]] = Fraction(assignment[v])
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    term *= vals[i] ** k
            total += term
        return total

    def subs(self, assignment: Mapping[str, Rat]) -> "MPoly":
        """Substitute rationals for a subset of the variables."""
        idx = {_VAR_INDEX[v]: Fraction(q) for v, q in assignment.items()}
        out = MPoly.zero()
        for e, c in self.terms.items():
            coeff = c
            rest = list(e)
            for i, q in idx.items():
                if e[i]:
                    coeff *= q ** e[i]
                    rest[i] = 0
            out = out + MPoly({tuple(rest): coeff})
        return out

    def derivative(self, name: str) -> "MPoly":
        i = _VAR_INDEX[name]
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                out[tuple(e2)] = c * e[i]
        return MPoly(out)

    def univariate_coeffs(self, name: str | None = None) -> list[Fraction]:
        """Dense coefficient list (low degree first) of a univariate polynomial.

        With name=None the single variable present is inferred; a constant
        polynomial yields a length-1 list.
        """
        vs = self.variables()
        if name is None:
            if len(vs) > 1:
                raise InputError(f"polynomial is multivariate: {vs}")
            name = vs[0] if vs else "x"
        elif any(v != name for v in vs):
            raise InputError(f"polynomial involves {vs}, not only {name!r}")
        i = _VAR_INDEX[name]
        n = self.degree_in(name)
        out = [Fraction(0)] * (max(n, 0) + 1)
        for e, c in self.terms.items():
            out[e[i]] = c
        return out

    @staticmethod
    def from_univariate(name: str, coeffs: Iterable) -> "MPoly":
        out = MPoly.zero()
        for k, c in enumerate(coeffs):
            c = Fraction(c)
            if c:
                out = out + MPoly.var(name, k) * c
        return out

    def as_univariate_in(self, name: str) -> dict[int, "MPoly"]:
        """View as a polynomial in `name` with MPoly coefficients."""
        i = _VAR_INDEX[name]
        out: dict[int, MPoly] = {}
        for e, c in self.terms.items():
            k = e[i]
            rest = list(e)
            rest[i] = 0
            cur = out.setdefault(k, MPoly.zero())
            out[k] = cur + MPoly({tuple(rest): c})
        return {k: v for k, v in out.items() if not v.is_zero}

    # -- normalization ----------------------------------------------------

    def rational_content(self) -> Fraction:
        """Positive rational c with self/c integer-coprime; sign from grlex lead."""
        if not self.terms:
            return Fraction(1)
        num = 0
        den = 1
        for c in self.terms.values():
            num = igcd(num, c.numerator)
            den = lcm(den, c.denominator)
        cont = Fraction(num, den)
        if self.leading()[1] < 0:
            cont = -cont
        return cont

    def normalized(self) -> "MPoly":
        """Integer-coprime coefficients with positive grlex-leading coefficient."""
        if not self.terms:
            return self
        cont = self.rational_content()
        r = MPoly.__new__(MPoly)
        r.terms = {e: c / cont for e, c in self.terms.items()}
        return r

    # -- display -----------------------------------------------------------

    def render(self) -> str:
        """Human-readable form; deterministic term order with a positive head."""
        if not self.terms:
            return "0"
        desc = sorted(self.terms, key=_grlex_key, reverse=True)
        if self.terms[desc[0]] < 0 and self.terms[desc[-1]] > 0:
            desc = desc[::-1]
        parts = []
        for e in desc:
            c = self.terms[e]
            mono = "*".join(
                (VARS[i] if k == 1 else f"{VARS[i]}^{k}")
                for i, k in enumerate(e)
                if k
            )
            if not mono:
                piece = rat_str(abs(c))
            elif abs(c) == 1:
                piece = mono
            else:
                piece = f"{rat_str(abs(c))}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + piece)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self):
        return f"MPoly({self.render()})"


def _coerce(x) -> MPoly:
    if isinstance(x, MPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return MPoly.const(x)
    raise InputError(f"cannot coerce {type(x).__name__} into a polynomial")


# -- exact division and gcd ------------------------------------------------


def exact_div(f: MPoly, g: MPoly) -> MPoly:
    """f/g when g divides f exactly (grlex long division, remainder must vanish)."""
    if g.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if len(g.terms) == 1:
        (ge, gc), = g.terms.items()
        out = {}
        for e, c in f.terms.items():
            diff = tuple(a - b for a, b in zip(e, ge))
            if any(k < 0 for k in diff):
                raise ArithmeticError("inexact polynomial division")
            out[diff] = c / gc
        return MPoly(out)
    q = MPoly.zero()
    r = f
    ge, gc = g.leading()
    while not r.is_zero:
        re, rc = r.leading()
        diff = tuple(a - b for a, b in zip(re, ge))
        if any(k < 0 for k in diff):
            raise ArithmeticError("inexact polynomial division")
        term = MPoly({diff: rc / gc})
        q = q + term
        r = r - term * g
    return q


def _uni_prem(f: list[MPoly], g: list[MPoly]) -> list[MPoly]:
    """Pseudo-remainder of dense MPoly-coefficient polys (in some main var)."""

    def normed(p):
        while p and p[-1].is_zero:
            p.pop()
        return p

    f = normed(list(f))
    g = normed(list(g))
    dg = len(g) - 1
    lcg = g[-1]
    e = len(f) - len(g) + 1
    r = f
    while r and len(r) - 1 >= dg:
        lead = r[-1]
        shift = len(r) - 1 - dg
        r = [a * lcg for a in r]
        for j in range(dg + 1):
            r[shift + j] = r[shift + j] - lead * g[j]
        r = normed(r)
        e -= 1
    if e > 0:
        m = lcg ** e
        r = [a * m for a in r]
    return r


def _monomial_part(p: MPoly) -> tuple:
    """Exponentwise-minimal monomial dividing every term of p."""
    it = iter(p.terms)
    m = list(next(it))
    for e in it:
        for i, k in enumerate(e):
            if k < m[i]:
                m[i] = k
        if not any(m):
            break
    return tuple(m)


def gcd_mpoly(f: MPoly, g: MPoly) -> MPoly:
    """gcd up to rational scalar, normalized (primitive PRS, recursive content)."""
    if f.is_zero:
        return g.normalized()
    if g.is_zero:
        return f.normalized()
    # fast paths: identical inputs, and monomial arguments
    if f.terms == g.terms:
        return f.normalized()
    if len(f.terms) == 1 or len(g.terms) == 1:
        mf, mg = _monomial_part(f), _monomial_part(g)
        return MPoly({tuple(min(a, b) for a, b in zip(mf, mg)): Fraction(1)})
    # pull out monomial factors first; only their shared part survives, and
    # the stripped operands make the PRS below much smaller
    mf, mg = _monomial_part(f), _monomial_part(g)
    if any(mf) or any(mg):
        shared = tuple(min(a, b) for a, b in zip(mf, mg))
        f = exact_div(f, MPoly({mf: Fraction(1)}))
        g = exact_div(g, MPoly({mg: Fraction(1)}))
        res = gcd_mpoly(f, g)
        if any(shared):
            res = MPoly({shared: Fraction(1)}) * res
        return res.normalized()
    vs = sorted(set(f.variables()) | set(g.variables()), key=_VAR_INDEX.get)
    if not vs:
        return MPoly.const(1)
    v = vs[0]
    fc = f.as_univariate_in(v)
    gc = g.as_univariate_in(v)
    if max(fc) == 0:
        return _gcd_with_constant(f, g, v)
    if max(gc) == 0:
        return _gcd_with_constant(g, f, v)

    def content_of(coeffs: dict[int, MPoly]) -> MPoly:
        cont = MPoly.zero()
        for p in coeffs.values():
            cont = gcd_mpoly(cont, p)
            if cont == MPoly.const(1):
                break
        return cont

    cont_f, cont_g = content_of(fc), content_of(gc)
    d = gcd_mpoly(cont_f, cont_g)

    def dense_pp(coeffs: dict[int, MPoly], cont: MPoly) -> list[MPoly]:
        n = max(coeffs)
        return [
            exact_div(coeffs.get(k, MPoly.zero()), cont)
            if k in coeffs
            else MPoly.zero()
            for k in range(n + 1)
        ]

    a, b = dense_pp(fc, cont_f), dense_pp(gc, cont_g)
    if len(a) < len(b):
        a, b = b, a
    while any(not p.is_zero for p in b):
        r = _uni_prem(a, b)
        # primitive part of r
        cont_r = MPoly.zero()
        for p in r:
            cont_r = gcd_mpoly(cont_r, p)
            if cont_r == MPoly.const(1):
                break
        if not cont_r.is_zero and cont_r != MPoly.const(1):
            r = [exact_div(p, cont_r) for p in r]
        a, b = b, r
    if len(a) == 1:
        return d.normalized()
    out = MPoly.zero()
    for k, p in enumerate(a):
        out = out + MPoly.var(v, k) * p
    return (d * out.normalized()).normalized()


def _gcd_with_constant(const_in_v: MPoly, other: MPoly, v: str):
    """gcd when one argument has degree 0 in the chosen main variable."""
    cont = MPoly.zero()
    for p in other.as_univariate_in(v).values():
        cont = gcd_mpoly(cont, p)
        if cont == MPoly.const(1):
            break
    return gcd_mpoly(const_in_v, cont)


# -- rational functions ------------------------------------------------------


class RatFunc:
    """Reduced quotient of two MPolys with a canonical denominator sign."""

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly | None = None, *, _reduced=False):
        den = MPoly.const(1) if den is None else den
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced and not num.is_zero:
            g = gcd_mpoly(num, den)
            if g.total_degree() > 0:
                num = exact_div(num, g)
                den = exact_div(den, g)
        if num.is_zero:
            den = MPoly.const(1)
        # canonical: den integer-coprime with positive grlex-leading coefficient
        cont = den.rational_content()
        if cont != 1:
            num = num * MPoly.const(1 / cont)
            den = den * MPoly.const(1 / cont)
        self.num = num
        self.den = den

    @staticmethod
    def const(q) -> "RatFunc":
        return RatFunc(MPoly.const(q))

    @staticmethod
    def var(name: str) -> "RatFunc":
        return RatFunc(MPoly.var(name))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __add__(self, other):
        other = _coerce_rf(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        r = RatFunc.__new__(RatFunc)
        r.num, r.den = -self.num, self.den
        return r

    def __sub__(self, other):
        return self + (-_coerce_rf(other))

    def __rsub__(self, other):
        return _coerce_rf(other) + (-self)

    def __mul__(self, other):
        other = _coerce_rf(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_rf(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _coerce_rf(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RatFunc(self.den, self.num) ** (-n)
        return RatFunc(self.num ** n, self.den ** n)

    def __eq__(self, other):
        if not isinstance(other, (RatFunc, MPoly, int, Fraction)):
            return NotImplemented
        return ratfunc_equal(self, _coerce_rf(other))

    def __hash__(self):
        return hash((self.num, self.den))

    def evaluate(self, assignment: Mapping[str, Rat]) -> Fraction:
        d = self.den.evaluate(assignment)
        if d == 0:
            raise ZeroDivisionError(f"pole: {self.den.render()} = 0")
        return self.num.evaluate(assignment) / d

    def subs(self, assignment: Mapping[str, Rat]) -> "RatFunc":
        den = self.den.subs(assignment)
        if den.is_zero:
            raise ZeroDivisionError(f"pole: {self.den.render()} = 0")
        return RatFunc(self.num.subs(assignment), den)

    def render(self) -> str:
        num, den = _display_pair(self.num, self.den)
        ns = num.render()
        if den == MPoly.const(1):
            return ns
        ds = den.render()
        ns = f"({ns})" if len(num.terms) > 1 else ns
        ds = f"({ds})" if len(den.terms) > 1 else ds
        return f"{ns}/{ds}"

    def __repr__(self):
        return f"RatFunc({self.render()})"


def _display_pair(num: MPoly, den: MPoly):
    """Sign arrangement for printing: positive head term of the denominator
    under pure lex in the fixed variable order (keeps the printed shape of
    classical displays like (d*u^6 - b)/(a - c*u^4))."""
    if den.is_zero or not den.terms:
        return num, den
    lead = max(den.terms, key=lambda e: e)  # pure lex on the fixed order
    if den.terms[lead] < 0:
        return -num, -den
    return num, den


def _coerce_rf(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, MPoly):
        return RatFunc(x)
    if isinstance(x, (int, Fraction)):
        return RatFunc.const(x)
    raise InputError(f"cannot coerce {type(x).__name__} into a rational function")


def ratfunc_equal(f: RatFunc, g: RatFunc) -> bool:
    """Exact equality: num(f)*den(g) - num(g)*den(f) is the zero polynomial."""
    return (f.num * g.den - g.num * f.den).is_zero


def compose_poly(p: MPoly, mapping: Mapping[str, RatFunc]) -> tuple[MPoly, MPoly]:
    """Substitute rational functions for variables of p; unreduced (num, den).

    Returns the cross-multiplied pair so identity checks can test num == 0
    without ever running a large multivariate gcd.
    """
    degs = {v: p.degree_in(v) for v in mapping if p.degree_in(v) > 0}
    den_total = MPoly.const(1)
    for v, dv in degs.items():
        den_total = den_total * (mapping[v].den ** dv)
    num_total = MPoly.zero()
    for e, c in p.terms.items():
        term_num = MPoly.const(c)
        rest = list(e)
        for v, dv in degs.items():
            i = _VAR_INDEX[v]
            k = e[i]
            rest[i] = 0
            rf = mapping[v]
            term_num = term_num * (rf.num ** k) * (rf.den ** (dv - k))
        term_num = term_num * MPoly({tuple(rest): Fraction(1)})
        num_total = num_total + term_num
    return num_total, den_total

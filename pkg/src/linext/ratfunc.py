"""Exact univariate polynomial and rational-function arithmetic over Q.

Polynomials are tuples of ints in ascending degree with no trailing zeros;
the empty tuple is the zero polynomial.  Rational functions are kept in a
canonical reduced form: primitive integer numerator and denominator, the
denominator with positive leading coefficient, and the rational content
folded into a scalar factor.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

IntPoly = tuple  # tuple[int, ...]

ZERO_POLY: IntPoly = ()
ONE_POLY: IntPoly = (1,)
Q_POLY: IntPoly = (0, 1)  # the variable q
Q_MINUS_1: IntPoly = (-1, 1)
Q_PLUS_1: IntPoly = (1, 1)


def pnorm(coeffs) -> IntPoly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def pdeg(a: IntPoly) -> int:
    """Degree, with deg 0 = -1."""
    return len(a) - 1


def padd(a: IntPoly, b: IntPoly) -> IntPoly:
    if len(a) < len(b):
        a, b = b, a
    c = list(a)
    for i, x in enumerate(b):
        c[i] += x
    return pnorm(c)


def pneg(a: IntPoly) -> IntPoly:
    return tuple(-x for x in a)


def psub(a: IntPoly, b: IntPoly) -> IntPoly:
    return padd(a, pneg(b))


def pmul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return ZERO_POLY
    c = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                c[i + j] += x * y
    return pnorm(c)


def pscale(a: IntPoly, k: int) -> IntPoly:
    if k == 0:
        return ZERO_POLY
    return tuple(k * x for x in a)


def ppow(a: IntPoly, n: int) -> IntPoly:
    r = ONE_POLY
    for _ in range(n):
        r = pmul(r, a)
    return r


def peval(a: IntPoly, x):
    r = 0
    for c in reversed(a):
        r = r * x + c
    return r


def pcontent(a: IntPoly) -> int:
    g = 0
    for x in a:
        g = gcd(g, x)
    return g


def pprim(a: IntPoly) -> IntPoly:
    """Primitive part with positive leading coefficient."""
    if not a:
        return a
    g = pcontent(a)
    if a[-1] < 0:
        g = -g
    return tuple(x // g for x in a)


def pdiv_exact(a: IntPoly, b: IntPoly) -> IntPoly:
    """Exact division a / b; raises if it does not divide over Q[x]."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ZERO_POLY
    rem = [Fraction(x) for x in a]
    quo = [Fraction(0)] * (len(a) - len(b) + 1)
    db = pdeg(b)
    lead = Fraction(b[-1])
    for i in range(len(rem) - 1, db - 1, -1):
        if rem[i]:
            q = rem[i] / lead
            quo[i - db] = q
            for j, y in enumerate(b):
                rem[i - db + j] -= q * y
    if any(rem):
        raise ValueError("inexact polynomial division")
    out = []
    for q in quo:
        if q.denominator != 1:
            raise ValueError("quotient not integral")
        out.append(int(q))
    return pnorm(out)


def prem_monic(a: IntPoly, b: IntPoly) -> IntPoly:
    """Remainder of a modulo b where b is monic with integer coefficients."""
    assert b and b[-1] == 1
    rem = list(a)
    db = pdeg(b)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c:
            for j, y in enumerate(b):
                rem[i - db + j] -= c * y
    return pnorm(rem[:db])


def _pseudo_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    da, db = pdeg(a), pdeg(b)
    lead = b[-1]
    rem = list(pscale(a, lead ** (da - db + 1))) if da >= db else list(a)
    rem += [0] * (da + 1 - len(rem))
    for i in range(da, db - 1, -1):
        c = rem[i]
        if c % lead != 0:
            raise AssertionError("pseudo-remainder bookkeeping broke")
        q = c // lead
        if q:
            for j, y in enumerate(b):
                rem[i - db + j] -= q * y
    return pnorm(rem)


def pgcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd over Q[x] (positive leading coefficient)."""
    a, b = pprim(a), pprim(b)
    while b:
        if pdeg(a) < pdeg(b):
            a, b = b, a
            continue
        r = _pseudo_rem(a, b)
        a, b = b, pprim(r)
    return a if a else ZERO_POLY


def root_multiplicity(a: IntPoly, r: int) -> int:
    """Multiplicity of the integer root r (multiplicity of (x - r))."""
    if not a:
        raise ValueError("zero polynomial has every root")
    m = 0
    while peval(a, r) == 0:
        a = pdiv_exact(a, (-r, 1))
        m += 1
    return m


@lru_cache(maxsize=None)
def cyclotomic(m: int) -> IntPoly:
    """The m-th cyclotomic polynomial, by dividing x^m - 1 by the proper ones."""
    poly = pnorm((-1,) + (0,) * (m - 1) + (1,))
    for d in range(1, m):
        if m % d == 0:
            poly = pdiv_exact(poly, cyclotomic(d))
    return poly


def poly_str(a: IntPoly, var: str = "q") -> str:
    """Render in descending degree, e.g. 'q^2+6*q+1'."""
    if not a:
        return "0"
    parts = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if c == 0:
            continue
        if i == 0:
            term = str(abs(c))
        else:
            v = var if i == 1 else f"{var}^{i}"
            term = v if abs(c) == 1 else f"{abs(c)}*{v}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, term))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, term in parts[1:]:
        out += sign + term
    return out


class RatFunc:
    """Rational function over Q in canonical reduced form.

    Stored as coef * num / den with coef a Fraction, num and den primitive
    integer polynomials, den with positive leading coefficient, and
    gcd(num, den) = 1.  Zero is coef == 0 with num = den = 1.
    """

    __slots__ = ("coef", "num", "den")

    def __init__(self, coef: Fraction, num: IntPoly, den: IntPoly):
        # Trusted internal constructor; use make() to canonicalize.
        self.coef = coef
        self.num = num
        self.den = den

    @staticmethod
    def make(num: IntPoly, den: IntPoly, coef: Fraction = Fraction(1)) -> "RatFunc":
        num, den = pnorm(num), pnorm(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num or coef == 0:
            return RF_ZERO
        g = pgcd(num, den)
        if pdeg(g) > 0:
            num = pdiv_exact(num, g)
            den = pdiv_exact(den, g)
        cn = pcontent(num)
        if num[-1] < 0:
            cn = -cn
        cd = pcontent(den)
        if den[-1] < 0:
            cd = -cd
        num = tuple(x // cn for x in num)
        den = tuple(x // cd for x in den)
        coef = coef * Fraction(cn, cd)
        if coef == 0:
            return RF_ZERO
        return RatFunc(coef, num, den)

    @staticmethod
    def from_poly(p: IntPoly) -> "RatFunc":
        return RatFunc.make(p, ONE_POLY)

    @staticmethod
    def from_rational(x) -> "RatFunc":
        return RatFunc.make(ONE_POLY, ONE_POLY, Fraction(x))

    def is_zero(self) -> bool:
        return self.coef == 0

    def __bool__(self) -> bool:
        return self.coef != 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            return NotImplemented
        return (self.coef, self.num, self.den) == (other.coef, other.num, other.den)

    def __hash__(self):
        return hash((self.coef, self.num, self.den))

    def __neg__(self) -> "RatFunc":
        if not self:
            return self
        return RatFunc(-self.coef, self.num, self.den)

    def __add__(self, other: "RatFunc") -> "RatFunc":
        if not self:
            return other
        if not other:
            return self
        an, ad = self.coef.numerator, self.coef.denominator
        bn, bd = other.coef.numerator, other.coef.denominator
        num = padd(
            pscale(pmul(self.num, other.den), an * bd),
            pscale(pmul(other.num, self.den), bn * ad),
        )
        den = pmul(self.den, other.den)
        return RatFunc.make(num, den, Fraction(1, ad * bd))

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return self + (-other)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        if not self or not other:
            return RF_ZERO
        # Cross-cancel before multiplying to keep degrees small.
        n1, d2 = self.num, other.den
        g = pgcd(n1, d2)
        if pdeg(g) > 0:
            n1, d2 = pdiv_exact(n1, g), pdiv_exact(d2, g)
        n2, d1 = other.num, self.den
        g = pgcd(n2, d1)
        if pdeg(g) > 0:
            n2, d1 = pdiv_exact(n2, g), pdiv_exact(d1, g)
        return RatFunc.make(pmul(n1, n2), pmul(d1, d2), self.coef * other.coef)

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        if not other:
            raise ZeroDivisionError("division by zero rational function")
        inv = RatFunc.make(other.den, other.num, 1 / other.coef)
        return self * inv

    def eval(self, x) -> Fraction:
        """Exact value at a rational point; raises at a pole."""
        x = Fraction(x)
        dv = peval(self.den, x)
        if dv == 0:
            raise ZeroDivisionError(f"pole at q={x}")
        return self.coef * Fraction(peval(self.num, x)) / dv

    def as_int_pair(self) -> tuple:
        """(num, den) as integer polynomials with the scalar folded in."""
        num = pscale(self.num, self.coef.numerator)
        den = pscale(self.den, self.coef.denominator)
        c = gcd(pcontent(num), pcontent(den))
        if c > 1:
            num = tuple(x // c for x in num)
            den = tuple(x // c for x in den)
        return num, den

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        return format_factored(self)


RF_ZERO = RatFunc(Fraction(0), ONE_POLY, ONE_POLY)
RF_ONE = RatFunc(Fraction(1), ONE_POLY, ONE_POLY)
RF_Q = RatFunc(Fraction(1), Q_POLY, ONE_POLY)


def divisible_by_qm1(a: RatFunc, k: int) -> bool:
    """Whether (q-1)^k divides a; the denominator must be coprime to q-1."""
    if not a:
        return True
    if peval(a.den, 1) == 0:
        raise AssertionError("denominator not coprime to q-1")
    if k <= 0:
        return True
    return root_multiplicity(a.num, 1) >= k


def qm1_order(a: RatFunc) -> int:
    """Multiplicity of (q-1) in the numerator (a must be nonzero)."""
    if not a:
        raise ValueError("zero has infinite (q-1) order")
    if peval(a.den, 1) == 0:
        raise AssertionError("denominator not coprime to q-1")
    return root_multiplicity(a.num, 1)


def _factored(p: IntPoly) -> tuple:
    """Split off (q-1)^a and (q+1)^b factors: returns (a, b, rest)."""
    a = b = 0
    while p and peval(p, 1) == 0:
        p = pdiv_exact(p, Q_MINUS_1)
        a += 1
    while p and peval(p, -1) == 0:
        p = pdiv_exact(p, Q_PLUS_1)
        b += 1
    return a, b, p


def format_factored(rf: RatFunc) -> str:
    """Display in the factored style '-2*(q-1)^3/(q+1)^4'."""
    if not rf:
        return "0"
    na, nb, nrest = _factored(rf.num)
    da, db, drest = _factored(rf.den)

    def powstr(base, e):
        if e == 0:
            return None
        return base if e == 1 else f"{base}^{e}"

    num_parts = []
    c = rf.coef
    if c.numerator != 1 or (na == 0 and nb == 0 and nrest == ONE_POLY):
        num_parts.append(str(c.numerator))
    if nrest != ONE_POLY:
        num_parts.append(f"({poly_str(nrest)})")
    for base, e in (("(q-1)", na), ("(q+1)", nb)):
        s = powstr(base, e)
        if s:
            num_parts.append(s)
    num_str = "*".join(num_parts) if num_parts else "1"
    if num_str.startswith("-1*"):
        num_str = "-" + num_str[3:]

    den_parts = []
    if c.denominator != 1:
        den_parts.append(str(c.denominator))
    if drest != ONE_POLY:
        den_parts.append(f"({poly_str(drest)})")
    for base, e in (("(q-1)", da), ("(q+1)", db)):
        s = powstr(base, e)
        if s:
            den_parts.append(s)
    if not den_parts:
        return num_str
    den_str = "*".join(den_parts)
    if len(den_parts) > 1:
        den_str = f"({den_str})"
    return f"{num_str}/{den_str}"

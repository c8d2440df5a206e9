"""The Hecke algebra H_n(q) in the T_w basis, over exact rational functions.

Permutations are 1-based one-line tuples, matching table keys like 2413.
The evacuation element E_1...E_{n-1} E_1...E_{n-2} ... E_1 is expanded with
integer-polynomial coefficients (every generator product is denominator-free)
and the global (q+1)^C(n,2) denominator is divided out at the end.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .ratfunc import (
    ONE_POLY,
    Q_MINUS_1,
    Q_PLUS_1,
    RF_ONE,
    RF_ZERO,
    RatFunc,
    padd,
    pmul,
    pnorm,
    ppow,
    pscale,
    qm1_order,
)

Perm = tuple  # tuple[int, ...], one-line notation with values 1..n

DEFAULT_HECKE_CAP = 7


class HeckeCapExceeded(RuntimeError):
    pass


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def perm_length(w: Perm) -> int:
    """Number of inversions."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def perm_cycles(w: Perm) -> int:
    """Number of cycles (fixed points count)."""
    n = len(w)
    seen = [False] * n
    k = 0
    for i in range(n):
        if not seen[i]:
            k += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = w[j] - 1
    return k


def reversal(w: Perm) -> Perm:
    """w-hat, the reversal of the one-line word (= w0 w)."""
    return w[::-1]


def apply_s_right(w: Perm, i: int) -> Perm:
    """w s_i: swap the entries in positions i, i+1 (1-based)."""
    return w[: i - 1] + (w[i], w[i - 1]) + w[i + 1:]


def has_right_ascent(w: Perm, i: int) -> bool:
    """l(w s_i) = l(w) + 1 iff w(i) < w(i+1)."""
    return w[i - 1] < w[i]


def reduced_word(w: Perm) -> tuple:
    """A reduced decomposition of w (selection-sort on descents)."""
    # Bubble sort: repeatedly remove a descent; the letters, reversed, are a
    # reduced word for w.
    w = list(w)
    letters = []
    changed = True
    while changed:
        changed = False
        for i in range(1, len(w)):
            if w[i - 1] > w[i]:
                w[i - 1], w[i] = w[i], w[i - 1]
                letters.append(i)
                changed = True
    return tuple(reversed(letters))


def longest_element_word(n: int) -> tuple:
    """The pinned reduced word (1, 2, ..., n-1, 1, ..., n-2, ..., 1, 2, 1) of w0."""
    return tuple(i for m in range(n - 1, 0, -1) for i in range(1, m + 1))


class HeckeElt:
    """A finitely supported map Perm -> RatFunc in the T_w basis."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict):
        self.n = n
        self.terms = {w: c for w, c in terms.items() if c}

    @staticmethod
    def unit(n: int) -> "HeckeElt":
        return HeckeElt(n, {identity_perm(n): RF_ONE})

    def coeff(self, w: Perm) -> RatFunc:
        return self.terms.get(tuple(w), RF_ZERO)

    def __eq__(self, other):
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __add__(self, other: "HeckeElt") -> "HeckeElt":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, RF_ZERO) + c
        return HeckeElt(self.n, out)

    def __sub__(self, other: "HeckeElt") -> "HeckeElt":
        return self + other.scale(-RF_ONE)

    def scale(self, c: RatFunc) -> "HeckeElt":
        return HeckeElt(self.n, {w: x * c for w, x in self.terms.items()})

    def mul_gen_right(self, i: int) -> "HeckeElt":
        """Right multiplication by T_i."""
        if not 1 <= i <= self.n - 1:
            raise IndexError(f"generator index {i} out of range 1..{self.n - 1}")
        q = RatFunc.from_poly((0, 1))
        qm1 = RatFunc.from_poly(Q_MINUS_1)
        out = {}

        def acc(w, c):
            if c:
                out[w] = out.get(w, RF_ZERO) + c

        for u, c in self.terms.items():
            v = apply_s_right(u, i)
            if has_right_ascent(u, i):
                acc(v, c)
            else:
                acc(v, c * q)
                acc(u, c * qm1)
        return HeckeElt(self.n, out)

    def mul_gen_left(self, i: int) -> "HeckeElt":
        """Left multiplication by T_i (swap the values i, i+1)."""
        if not 1 <= i <= self.n - 1:
            raise IndexError(f"generator index {i} out of range 1..{self.n - 1}")
        q = RatFunc.from_poly((0, 1))
        qm1 = RatFunc.from_poly(Q_MINUS_1)
        out = {}

        def acc(w, c):
            if c:
                out[w] = out.get(w, RF_ZERO) + c

        for u, c in self.terms.items():
            v = tuple(i + 1 if x == i else i if x == i + 1 else x for x in u)
            if u.index(i) < u.index(i + 1):  # l(s_i u) = l(u) + 1
                acc(v, c)
            else:
                acc(v, c * q)
                acc(u, c * qm1)
        return HeckeElt(self.n, out)

    def mul_e_left(self, i: int) -> "HeckeElt":
        qm1 = RatFunc.from_poly(Q_MINUS_1)
        inv_qp1 = RatFunc.make(ONE_POLY, Q_PLUS_1)
        two = RatFunc.from_rational(2)
        return (self.scale(qm1) - self.mul_gen_left(i).scale(two)).scale(inv_qp1)

    def mul_e_right(self, i: int) -> "HeckeElt":
        """Right multiplication by E_i = (q - 1 - 2 T_i) / (q + 1)."""
        qm1 = RatFunc.from_poly(Q_MINUS_1)
        inv_qp1 = RatFunc.make(ONE_POLY, Q_PLUS_1)
        two = RatFunc.from_rational(2)
        return (self.scale(qm1) - self.mul_gen_right(i).scale(two)).scale(inv_qp1)

    def __repr__(self):
        items = sorted(self.terms.items())
        body = ", ".join(f"{''.join(map(str, w))}: {c}" for w, c in items)
        return f"HeckeElt(n={self.n}, {{{body}}})"


def t_w(n: int, w: Perm) -> HeckeElt:
    """T_w as a product of generators along a reduced decomposition."""
    elt = HeckeElt.unit(n)
    for i in reduced_word(tuple(w)):
        elt = elt.mul_gen_right(i)
    return elt


def t_w_from_word(n: int, word) -> HeckeElt:
    elt = HeckeElt.unit(n)
    for i in word:
        elt = elt.mul_gen_right(i)
    return elt


def e_i(n: int, i: int) -> HeckeElt:
    """E_i = (1/(q+1)) (q - 1 - 2 T_i); an involution (E_i^2 = 1)."""
    if not 1 <= i <= n - 1:
        raise IndexError(f"generator index {i} out of range 1..{n - 1}")
    qm1_over = RatFunc.make(Q_MINUS_1, Q_PLUS_1)
    minus2_over = RatFunc.make(ONE_POLY, Q_PLUS_1, Fraction(-2))
    return HeckeElt(
        n,
        {
            identity_perm(n): qm1_over,
            apply_s_right(identity_perm(n), i): minus2_over,
        },
    )


@lru_cache(maxsize=None)
def _expand_numerators(n: int) -> dict:
    """Expand prod (q - 1 - 2 T_i) over the evacuation word of w0.

    Returns {w: IntPoly}; dividing each entry by (q+1)^C(n,2) gives c_w(q).
    """
    terms = {identity_perm(n): ONE_POLY}
    for i in longest_element_word(n):
        out = {}

        def acc(w, poly):
            if poly:
                out[w] = padd(out.get(w, ()), poly)

        for u, poly in terms.items():
            # (q - 1) * T_u term of the factor
            acc(u, pmul(poly, Q_MINUS_1))
            # -2 T_u T_i term
            v = apply_s_right(u, i)
            if has_right_ascent(u, i):
                acc(v, pscale(poly, -2))
            else:
                acc(v, pscale(pmul(poly, (0, 1)), -2))
                acc(u, pscale(pmul(poly, Q_MINUS_1), -2))
        terms = out
    return terms


def evacuation_element(n: int, cap: int = DEFAULT_HECKE_CAP) -> HeckeElt:
    """E_1...E_{n-1} E_1...E_{n-2} ... E_1 expanded in the T_w basis."""
    if n > cap:
        raise HeckeCapExceeded(f"n = {n} exceeds the Hecke cap {cap}")
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return HeckeElt.unit(1)
    den = ppow(Q_PLUS_1, n * (n - 1) // 2)
    terms = {
        w: RatFunc.make(poly, den)
        for w, poly in _expand_numerators(n).items()
    }
    return HeckeElt(n, terms)


def c_w(n: int, w: Perm, cap: int = DEFAULT_HECKE_CAP) -> RatFunc:
    return evacuation_element(n, cap=cap).coeff(tuple(w))


def scalar_product(g: HeckeElt, h: HeckeElt) -> RatFunc:
    """<T_u, T_v> = q^{l(u)} delta_{uv}, extended bilinearly."""
    if g.n != h.n:
        raise ValueError("mismatched n")
    total = RF_ZERO
    for w, c in g.terms.items():
        d = h.terms.get(w)
        if d:
            total = total + c * d * RatFunc.from_poly(pnorm((0,) * perm_length(w) + (1,)))
    return total


def cid_closed_form(n: int) -> RatFunc:
    """((q-1)/(q+1))^floor(n/2)."""
    k = n // 2
    return RatFunc.make(ppow(Q_MINUS_1, k), ppow(Q_PLUS_1, k))


def check_thm_cid(n: int, cap: int = DEFAULT_HECKE_CAP) -> bool:
    elt = evacuation_element(n, cap=cap)
    return elt.coeff(identity_perm(n)) == cid_closed_form(n)


def divisibility_report(n: int, cap: int = DEFAULT_HECKE_CAP) -> list:
    """Per-w rows (w, bound, actual (q-1)-order or None for 0, passes, tight).

    bound = n - kappa(w-hat); zero coefficients pass trivially.
    """
    elt = evacuation_element(n, cap=cap)
    rows = []
    for w in permutations(range(1, n + 1)):
        bound = n - perm_cycles(reversal(w))
        c = elt.coeff(w)
        if not c:
            rows.append((w, bound, None, True, False))
        else:
            order = qm1_order(c)
            rows.append((w, bound, order, order >= bound, order == bound))
    return rows

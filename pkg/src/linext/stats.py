"""Descent statistics, W'_P(x), dual domino tableaux and self-evacuation.

The comaj machinery requires a natural partial order (the order relation
refines the integer order on ids).  Entry points that take an arbitrary
poset relabel it first via natural_relabel; W'_P only depends on P up to
isomorphism, so this is harmless.
"""

from __future__ import annotations

from dataclasses import dataclass

from .posets import (
    DEFAULT_EXTENSION_CAP,
    CapExceeded,
    Poset,
    Word,
    count_extensions,
    is_natural,
    linear_extensions,
    maximal_chains,
    restrict,
)
from .promotion import evacuate, tau_word
from .ratfunc import IntPoly, pnorm


class NotNaturalError(ValueError):
    pass


def _require_natural(P: Poset):
    if not is_natural(P):
        raise NotNaturalError("poset is not a natural partial order; relabel first")


def descent_set(P: Poset, word: Word) -> frozenset:
    """D(w) = {i : a_i > a_{i+1}} (1-based positions, natural labels)."""
    _require_natural(P)
    return frozenset(i for i in range(1, len(word)) if word[i - 1] > word[i])


def comaj(P: Poset, word: Word) -> int:
    p = len(word)
    return sum(p - i for i in descent_set(P, word))


def maj(P: Poset, word: Word) -> int:
    return sum(descent_set(P, word))


def wprime_poly(P: Poset, cap: int = DEFAULT_EXTENSION_CAP) -> IntPoly:
    """W'_P(x) = sum over linear extensions of x^comaj."""
    _require_natural(P)
    n = count_extensions(P)
    if cap is not None and n > cap:
        raise CapExceeded(f"e(P) = {n} exceeds cap {cap}")
    coeffs = [0] * (P.p * (P.p - 1) // 2 + 1)
    for w in linear_extensions(P, cap=cap):
        coeffs[comaj(P, w)] += 1
    return pnorm(coeffs)


def w_poly(P: Poset, cap: int = DEFAULT_EXTENSION_CAP) -> IntPoly:
    """W_P(x), the maj variant."""
    _require_natural(P)
    coeffs = [0] * (P.p * (P.p - 1) // 2 + 1)
    for w in linear_extensions(P, cap=cap):
        coeffs[maj(P, w)] += 1
    return pnorm(coeffs)


def dual_domino_tableaux(P: Poset, dual: bool = True) -> list:
    """All dual P-domino tableaux as chains of ideals (tuples of frozensets).

    A step adds a two-element chain {s, t} with s < t; the first step adds a
    single element when p is odd.  With dual=False the non-dual variant is
    enumerated instead (single final step when p is odd); the two agree for
    even p.
    """
    p = P.p
    steps = []  # sizes of increments bottom-up
    if dual:
        if p % 2:
            steps = [1] + [2] * (p // 2)
        else:
            steps = [2] * (p // 2)
    else:
        if p % 2:
            steps = [2] * (p // 2) + [1]
        else:
            steps = [2] * (p // 2)

    out = []

    def increments(mask, size):
        """Ideal increments of the given size; 2-element ones must be chains."""
        free = [t for t in range(p) if not (mask >> t & 1)]
        if size == 1:
            for t in free:
                if not (P.geq_mask[t] & ~(1 << t) & ~mask):
                    yield (t,)
        else:
            for s in free:
                for t in free:
                    if s == t or not P.less(s, t):
                        continue
                    both = (1 << s) | (1 << t)
                    below = (P.geq_mask[s] | P.geq_mask[t]) & ~both
                    if not (below & ~mask):
                        yield (s, t)

    def rec(mask, depth, chain_acc):
        if depth == len(steps):
            out.append(tuple(chain_acc))
            return
        for inc in increments(mask, steps[depth]):
            m2 = mask
            for t in inc:
                m2 |= 1 << t
            members = frozenset(
                t for t in range(p) if m2 >> t & 1
            )
            rec(m2, depth + 1, chain_acc + [members])

    rec(0, 0, [frozenset()])
    return out


def domino_word(tableau) -> Word:
    """The dual domino linear extension of a tableau (increments in P-order)."""
    word = []
    for lo, hi in zip(tableau, tableau[1:]):
        inc = sorted(hi - lo)
        word.extend(inc)
    return tuple(word)


def is_dual_domino_word(P: Poset, word: Word) -> bool:
    """Whether the paired prefixes of the word form a dual domino tableau."""
    p = len(word)
    i = 0
    if p % 2:
        i = 1  # first increment is a singleton
    while i < p:
        s, t = word[i], word[i + 1]
        if not P.less(s, t):
            return False
        i += 2
    return P.is_extension(word)


def self_evacuating(P: Poset, cap: int = DEFAULT_EXTENSION_CAP) -> list:
    n = count_extensions(P)
    if cap is not None and n > cap:
        raise CapExceeded(f"e(P) = {n} exceeds cap {cap}")
    return [w for w in linear_extensions(P, cap=cap) if evacuate(P, w) == w]


def domino_to_selfevac(P: Poset, word: Word) -> Word:
    """The bijection w -> w~ from dual domino words to self-evacuating ones.

    w~ = w tau_1 . tau_3 tau_2 tau_1 . tau_5 ... tau_1 ... tau_m ... tau_1,
    with m = p-1 for even p and m = p-2 for odd p.
    """
    if not is_dual_domino_word(P, word):
        raise ValueError("word is not a dual domino linear extension")
    p = P.p
    m = p - 1 if p % 2 == 0 else p - 2
    for top in range(1, m + 1, 2):
        word = tau_word(P, word, range(top, 0, -1))
    return word


def extension_parity(word: Word) -> int:
    """Parity (0 even, 1 odd) of the word as a permutation of the ids."""
    n = len(word)
    inv = sum(
        1 for i in range(n) for j in range(i + 1, n) if word[i] > word[j]
    )
    return inv % 2


@dataclass(frozen=True)
class SignBalanceReport:
    balanced: bool
    thm4a_applies: bool
    thm4b_applies: bool
    even: int
    odd: int


def sign_balance_report(P: Poset, cap: int = DEFAULT_EXTENSION_CAP) -> SignBalanceReport:
    """Brute-force parity census plus the two sign-balance hypotheses.

    (a) every maximal chain length l (edge count) satisfies p = l mod 2;
    (b) for every t the maximal chains of the principal ideal below t have
        equal-parity lengths, and C(p,2) and Gamma(P) have opposite parity,
        where Gamma sums the longest-chain lengths of those ideals.  (The
        opposite-parity form is forced: with equal parities the p-element
        chain itself would be a counterexample, having one extension.)
    """
    n = count_extensions(P)
    if cap is not None and n > cap:
        raise CapExceeded(f"e(P) = {n} exceeds cap {cap}")
    even = odd = 0
    for w in linear_extensions(P, cap=cap):
        if extension_parity(w):
            odd += 1
        else:
            even += 1

    p = P.p
    chain_lengths = [len(ch) - 1 for ch in maximal_chains(P)]
    thm4a = all(length % 2 == p % 2 for length in chain_lengths)

    thm4b = True
    gamma = 0
    for t in range(p):
        down = [s for s in range(p) if P.leq(s, t)]
        sub, _ = restrict(P, down)
        lens = [len(ch) - 1 for ch in maximal_chains(sub)]
        if len({length % 2 for length in lens}) > 1:
            thm4b = False
            break
        gamma += max(lens)
    if thm4b:
        thm4b = (p * (p - 1) // 2) % 2 != gamma % 2

    return SignBalanceReport(
        balanced=(even == odd),
        thm4a_applies=thm4a,
        thm4b_applies=thm4b,
        even=even,
        odd=odd,
    )

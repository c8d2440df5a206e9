"""Promotion and evacuation on maximal chains of graded posets.

Covers the combinatorial tau_i for slender posets, dual domino chains, the
cross-polytope closed forms on signed permutations, and the linear operator
tau_i on the chain vector space of an arbitrary graded poset.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

from .posets import Poset, poset_from_covers


@dataclass(frozen=True)
class GradedPoset:
    poset: Poset
    rank: tuple
    bottom: int
    top: int
    height: int  # rank of the top element

    def middles(self, s: int, t: int) -> tuple:
        """Elements strictly between s and t."""
        P = self.poset
        mask = P.leq_mask[s] & P.geq_mask[t] & ~(1 << s) & ~(1 << t)
        out = []
        while mask:
            out.append((mask & -mask).bit_length() - 1)
            mask &= mask - 1
        return tuple(out)


def graded_from_poset(P: Poset) -> GradedPoset:
    """Validate unique bottom/top and that covers raise rank by exactly one."""
    mins, maxs = P.minimals(), P.maximals()
    if len(mins) != 1 or len(maxs) != 1:
        raise ValueError("graded poset needs a unique bottom and top")
    bottom, top = mins[0], maxs[0]
    rank = [None] * P.p
    rank[bottom] = 0
    order = sorted(range(P.p), key=lambda t: bin(P.geq_mask[t]).count("1"))
    for t in order:
        if t == bottom:
            continue
        ranks = {rank[s] for s in P.down[t]}
        if len(ranks) != 1 or None in ranks:
            raise ValueError("poset is not graded")
        rank[t] = ranks.pop() + 1
    return GradedPoset(P, tuple(rank), bottom, top, rank[top])


def maximal_chains(Q: GradedPoset) -> list:
    """All maximal chains bottom..top, sorted; each has height+1 elements."""
    P = Q.poset
    out = []
    stack = [(Q.bottom,)]
    while stack:
        path = stack.pop()
        if path[-1] == Q.top:
            out.append(path)
            continue
        for t in P.up[path[-1]]:
            stack.append(path + (t,))
    out.sort()
    return out


def is_slender(Q: GradedPoset) -> bool:
    """Every rank-2 interval has 3 or 4 elements (one or two middles)."""
    P = Q.poset
    for s in range(P.p):
        for t in range(P.p):
            if P.less(s, t) and Q.rank[t] - Q.rank[s] == 2:
                if len(Q.middles(s, t)) not in (1, 2):
                    return False
    return True


def tau_chain(Q: GradedPoset, chain: tuple, i: int):
    """Swap t_i for the other middle of [t_{i-1}, t_{i+1}] when there is one."""
    if not is_slender(Q):
        raise ValueError("tau_chain requires a slender poset")
    return _tau_chain_unchecked(Q, chain, i)


def _tau_chain_unchecked(Q: GradedPoset, chain: tuple, i: int):
    if not 1 <= i <= Q.height - 1:
        raise IndexError(f"tau index {i} out of range 1..{Q.height - 1}")
    mids = Q.middles(chain[i - 1], chain[i + 1])
    if len(mids) == 1:
        return chain
    other = mids[0] if mids[1] == chain[i] else mids[1]
    return chain[:i] + (other,) + chain[i + 1:]


def _tau_word_chain(Q: GradedPoset, chain, indices):
    for i in indices:
        chain = _tau_chain_unchecked(Q, chain, i)
    return chain


def promote_chain(Q: GradedPoset, chain: tuple) -> tuple:
    """delta = tau_1 ... tau_{n-1} on a maximal chain (slender posets)."""
    if not is_slender(Q):
        raise ValueError("requires a slender poset")
    return _tau_word_chain(Q, chain, range(1, Q.height))


def evacuate_chain(Q: GradedPoset, chain: tuple) -> tuple:
    """gamma on a maximal chain (slender posets)."""
    if not is_slender(Q):
        raise ValueError("requires a slender poset")
    for m in range(Q.height - 1, 0, -1):
        chain = _tau_word_chain(Q, chain, range(1, m + 1))
    return chain


def self_evacuating_chains(Q: GradedPoset) -> list:
    return [m for m in maximal_chains(Q) if evacuate_chain(Q, m) == m]


def dual_domino_chains(Q: GradedPoset) -> list:
    """Chains bottom = t_0 < ... < t_r = top whose steps are rank-2 chain
    intervals (unique middle), with a single cover step first when the rank
    of Q is odd.

    "Two-element chain" is read as the half-open step (t_{i-1}, t_i]: a
    rank-2 interval that is a chain contributes the two new elements, the
    odd-rank first step contributes one.
    """
    n = Q.height
    P = Q.poset

    def two_step_targets(s):
        out = []
        for t in range(P.p):
            if P.less(s, t) and Q.rank[t] - Q.rank[s] == 2:
                if len(Q.middles(s, t)) == 1:
                    out.append(t)
        return out

    results = []

    def rec(path):
        cur = path[-1]
        if cur == Q.top:
            results.append(tuple(path))
            return
        for t in two_step_targets(cur):
            rec(path + [t])

    if n % 2 == 0:
        rec([Q.bottom])
    else:
        for t in P.up[Q.bottom]:
            rec([Q.bottom, t])
    return results


# ---------------------------------------------------------------------------
# Cross-polytope face lattice and signed permutations.

SignedPerm = tuple  # tuple of nonzero ints; negative means barred


def cross_polytope(n: int):
    """Face lattice of the n-dimensional cross-polytope.

    Returns (Q, faces) where faces[id] is the frozenset of vertices (ints
    +-1..+-n) of that face; the empty face is the bottom and an artificial
    top is appended.  Maximal chains correspond to signed permutations.
    """
    if n > 6:
        raise ValueError("cross_polytope capped at n = 6")
    faces = [frozenset()]
    for k in range(1, n + 1):
        for support in combinations(range(1, n + 1), k):
            for signs in _sign_vectors(k):
                faces.append(frozenset(v * s for v, s in zip(support, signs)))
    faces.sort(key=lambda f: (len(f), sorted(f)))
    top = frozenset({0})  # sentinel; not a real vertex set
    faces.append(top)
    index = {f: i for i, f in enumerate(faces)}
    covers = []
    for f, i in index.items():
        if f == top:
            continue
        if len(f) == n:
            covers.append((i, index[top]))
            continue
        for v in range(1, n + 1):
            if v not in f and -v not in f:
                for s in (v, -v):
                    covers.append((i, index[f | {s}]))
    Q = graded_from_poset(poset_from_covers(len(faces), covers))
    return Q, tuple(faces)


def _sign_vectors(k):
    for bits in range(1 << k):
        yield tuple(1 if bits >> i & 1 else -1 for i in range(k))


def chain_to_signed_perm(faces, chain) -> SignedPerm:
    """a_i = the unique vertex of t_i not in t_{i-1} (i = 1..n)."""
    out = []
    for lo, hi in zip(chain, chain[1:]):
        flo, fhi = faces[lo], faces[hi]
        if 0 in fhi:  # artificial top
            break
        (new,) = fhi - flo
        out.append(new)
    return tuple(out)


def signed_perm_to_chain(faces, w: SignedPerm) -> tuple:
    index = {f: i for i, f in enumerate(faces)}
    chain = [index[frozenset()]]
    cur = frozenset()
    for a in w:
        cur = cur | {a}
        chain.append(index[cur])
    chain.append(len(faces) - 1)  # top
    return tuple(chain)


def all_signed_perms(n: int):
    for base in permutations(range(1, n + 1)):
        for signs in _sign_vectors(n):
            yield tuple(v * s for v, s in zip(base, signs))


def signed_delta(w: SignedPerm) -> SignedPerm:
    """w delta = a_2, a_3, ..., a_n, a'_1."""
    return w[1:] + (-w[0],)


def signed_gamma(w: SignedPerm) -> SignedPerm:
    """w gamma = a'_1, a_n, a_{n-1}, ..., a_2."""
    return (-w[0],) + w[:0:-1]


def signed_gamma_star(w: SignedPerm) -> SignedPerm:
    """w gamma* = a'_n, a'_{n-1}, ..., a'_1."""
    return tuple(-a for a in reversed(w))


def signed_delta_power(w: SignedPerm) -> SignedPerm:
    """w delta^{n+1} = w gamma gamma* = a'_2, ..., a'_n, a_1."""
    return tuple(-a for a in w[1:]) + (w[0],)


def signed_group_order(n: int) -> int:
    """Order of <gamma, gamma*> acting on all signed permutations of size n."""
    domain = sorted(all_signed_perms(n))
    index = {w: i for i, w in enumerate(domain)}
    g1 = tuple(index[signed_gamma(w)] for w in domain)
    g2 = tuple(index[signed_gamma_star(w)] for w in domain)
    ident = tuple(range(len(domain)))
    seen = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            for g in (g1, g2):
                y = tuple(g[i] for i in x)
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return len(seen)


# ---------------------------------------------------------------------------
# The linear operator tau_i on the chain vector space of any graded poset.


class ChainVector:
    """Finitely supported map MaxChain -> Fraction."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict = None):
        self.terms = {
            m: Fraction(c) for m, c in (terms or {}).items() if c
        }

    @staticmethod
    def basis(chain) -> "ChainVector":
        return ChainVector({tuple(chain): Fraction(1)})

    def coeff(self, chain) -> Fraction:
        return self.terms.get(tuple(chain), Fraction(0))

    def __add__(self, other: "ChainVector") -> "ChainVector":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return ChainVector(out)

    def scale(self, c) -> "ChainVector":
        c = Fraction(c)
        return ChainVector({m: x * c for m, x in self.terms.items()})

    def __sub__(self, other: "ChainVector") -> "ChainVector":
        return self + other.scale(-1)

    def __eq__(self, other):
        if not isinstance(other, ChainVector):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self):
        return f"ChainVector({self.terms})"


def chain_neighbors(Q: GradedPoset, chain: tuple, i: int) -> list:
    """N_i(m): maximal chains differing from m exactly at t_i."""
    mids = Q.middles(chain[i - 1], chain[i + 1])
    return [
        chain[:i] + (t,) + chain[i + 1:] for t in mids if t != chain[i]
    ]


def linear_tau(Q: GradedPoset, v: ChainVector, i: int) -> ChainVector:
    """m tau_i = ((q-1) m - 2 sum N_i(m)) / (q+1) with q = #N_i(m).

    Chains with q = 0 are fixed.
    """
    if not 1 <= i <= Q.height - 1:
        raise IndexError(f"tau index {i} out of range 1..{Q.height - 1}")
    out = {}

    def acc(m, c):
        if c:
            out[m] = out.get(m, Fraction(0)) + c

    for m, c in v.terms.items():
        nbrs = chain_neighbors(Q, m, i)
        q = len(nbrs)
        if q == 0:
            acc(m, c)
            continue
        acc(m, c * Fraction(q - 1, q + 1))
        for m2 in nbrs:
            acc(m2, c * Fraction(-2, q + 1))
    return ChainVector(out)


def promote_chains(Q: GradedPoset, v: ChainVector) -> ChainVector:
    for i in range(1, Q.height):
        v = linear_tau(Q, v, i)
    return v


def evacuate_chains(Q: GradedPoset, v: ChainVector) -> ChainVector:
    """The gamma word of linear tau operators; an involution."""
    for m in range(Q.height - 1, 0, -1):
        for i in range(1, m + 1):
            v = linear_tau(Q, v, i)
    return v

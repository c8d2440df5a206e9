"""Finite posets, order ideals, lattices of ideals, shapes and linear extensions.

Elements are dense integer ids 0..p-1.  A linear extension is a tuple of all
p elements (the word u_1 ... u_p with u_i = f^{-1}(i)); every prefix of the
word is an order ideal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

Word = tuple  # tuple[int, ...], a linear extension as a word

DEFAULT_IDEAL_CAP = 2 ** 20
DEFAULT_EXTENSION_CAP = 200_000


class CycleError(ValueError):
    """Raised when the cover relation contains a directed cycle."""

    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__(f"cover relation has a cycle: {' < '.join(map(str, cycle))}")


class CapExceeded(RuntimeError):
    """Raised when an enumeration would exceed its configured size cap."""


@dataclass(frozen=True)
class Poset:
    p: int
    covers: tuple  # sorted tuple of (s, t) pairs, s covered by t
    up: tuple = field(compare=False)  # up[s]: elements covering s
    down: tuple = field(compare=False)  # down[t]: elements covered by t
    leq_mask: tuple = field(compare=False)  # bit t of leq_mask[s] set iff s <= t
    geq_mask: tuple = field(compare=False)  # bit s of geq_mask[t] set iff s <= t

    def leq(self, s: int, t: int) -> bool:
        return bool(self.leq_mask[s] >> t & 1)

    def less(self, s: int, t: int) -> bool:
        return s != t and self.leq(s, t)

    def comparable(self, s: int, t: int) -> bool:
        return self.leq(s, t) or self.leq(t, s)

    def minimals(self) -> tuple:
        return tuple(t for t in range(self.p) if not self.down[t])

    def maximals(self) -> tuple:
        return tuple(t for t in range(self.p) if not self.up[t])

    def is_ideal(self, members) -> bool:
        m = set(members)
        return all(s in m for t in m for s in range(self.p) if self.less(s, t))

    def is_extension(self, word) -> bool:
        if sorted(word) != list(range(self.p)):
            return False
        pos = {t: i for i, t in enumerate(word)}
        return all(pos[s] < pos[t] for (s, t) in self.covers)

    def __repr__(self):
        return f"Poset(p={self.p}, covers={list(self.covers)})"


def _closure_masks(p: int, pairs) -> tuple:
    """Reflexive-transitive closure of the given pairs as bitmasks."""
    adj = [[] for _ in range(p)]
    for s, t in pairs:
        adj[s].append(t)
    # Topological order with cycle witness.
    state = [0] * p  # 0 new, 1 active, 2 done
    order = []
    for root in range(p):
        if state[root]:
            continue
        stack = [(root, iter(adj[root]))]
        state[root] = 1
        path = [root]
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if state[nxt] == 1:
                    i = path.index(nxt)
                    raise CycleError(path[i:] + [nxt])
                if state[nxt] == 0:
                    state[nxt] = 1
                    path.append(nxt)
                    stack.append((nxt, iter(adj[nxt])))
                    advanced = True
                    break
            if not advanced:
                state[node] = 2
                order.append(node)
                path.pop()
                stack.pop()
    masks = [0] * p
    for node in order:  # reverse topological: successors already done
        m = 1 << node
        for nxt in adj[node]:
            m |= masks[nxt]
        masks[node] = m
    return tuple(masks)


def poset_from_covers(p: int, covers) -> Poset:
    """Build a poset from relation pairs; applies transitive reduction.

    Rejects out-of-range ids and cycles (with a cycle witness).
    """
    for s, t in covers:
        if not (0 <= s < p and 0 <= t < p):
            raise ValueError(f"pair ({s},{t}) references an id outside 0..{p - 1}")
        if s == t:
            raise CycleError([s, t])
    leq_mask = _closure_masks(p, covers)
    geq_mask = [0] * p
    for s in range(p):
        m = leq_mask[s]
        while m:
            t = (m & -m).bit_length() - 1
            geq_mask[t] |= 1 << s
            m &= m - 1
    reduced = []
    for s in range(p):
        for t in range(p):
            if s != t and leq_mask[s] >> t & 1:
                between = leq_mask[s] & geq_mask[t] & ~(1 << s) & ~(1 << t)
                if not between:
                    reduced.append((s, t))
    reduced.sort()
    up = [[] for _ in range(p)]
    down = [[] for _ in range(p)]
    for s, t in reduced:
        up[s].append(t)
        down[t].append(s)
    return Poset(
        p=p,
        covers=tuple(reduced),
        up=tuple(map(tuple, up)),
        down=tuple(map(tuple, down)),
        leq_mask=tuple(leq_mask),
        geq_mask=tuple(geq_mask),
    )


def chain(n: int) -> Poset:
    return poset_from_covers(n, [(i, i + 1) for i in range(n - 1)])


def antichain(n: int) -> Poset:
    return poset_from_covers(n, [])


def ordinal_sum(lower: Poset, upper: Poset) -> Poset:
    """Every element of `lower` below every element of `upper`."""
    off = lower.p
    pairs = list(lower.covers)
    pairs += [(s + off, t + off) for (s, t) in upper.covers]
    pairs += [(s, t + off) for s in range(lower.p) for t in range(upper.p)]
    return poset_from_covers(lower.p + upper.p, pairs)


def disjoint_union(a: Poset, b: Poset) -> Poset:
    off = a.p
    pairs = list(a.covers) + [(s + off, t + off) for (s, t) in b.covers]
    return poset_from_covers(a.p + b.p, pairs)


def linear_extensions(P: Poset, cap: int = DEFAULT_EXTENSION_CAP) -> Iterator[Word]:
    """Yield every linear extension exactly once, in lexicographic word order."""
    p = P.p
    full = (1 << p) - 1
    geq = P.geq_mask
    word = []
    count = 0

    def rec(mask: int):
        nonlocal count
        if mask == full:
            count += 1
            if cap is not None and count > cap:
                raise CapExceeded(f"more than {cap} linear extensions")
            yield tuple(word)
            return
        for t in range(p):
            bit = 1 << t
            if mask & bit:
                continue
            if (geq[t] & ~bit) & ~mask:
                continue  # some element below t not placed yet
            word.append(t)
            yield from rec(mask | bit)
            word.pop()

    yield from rec(0)


def count_extensions(P: Poset) -> int:
    """e(P), by dynamic programming over order ideals."""
    full = (1 << P.p) - 1
    leq = P.leq_mask
    memo = {0: 1}

    def f(mask: int) -> int:
        if mask in memo:
            return memo[mask]
        total = 0
        m = mask
        while m:
            bit = m & -m
            t = bit.bit_length() - 1
            m &= m - 1
            if leq[t] & ~(1 << t) & mask:
                continue  # t not maximal in the ideal
            total += f(mask ^ bit)
        memo[mask] = total
        return total

    return f(full)


def ideals(P: Poset, cap: int = DEFAULT_IDEAL_CAP) -> list:
    """All order ideals as bitmasks, sorted by (size, lowest-id members)."""
    seen = {0}
    frontier = [0]
    geq = P.geq_mask
    while frontier:
        new = []
        for mask in frontier:
            for t in range(P.p):
                bit = 1 << t
                if mask & bit:
                    continue
                if (geq[t] & ~bit) & ~mask:
                    continue  # t not minimal in the complement
                nxt = mask | bit
                if nxt not in seen:
                    seen.add(nxt)
                    if len(seen) > cap:
                        raise CapExceeded(f"more than {cap} order ideals")
                    new.append(nxt)
        frontier = new
    return sorted(seen, key=lambda m: (bin(m).count("1"), _mask_members(m)))


def _mask_members(mask: int) -> tuple:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return tuple(out)


def ideals_lattice(P: Poset, cap: int = DEFAULT_IDEAL_CAP):
    """J(P) ordered by inclusion.

    Returns (lattice, members) where members[i] is the frozenset of P-elements
    of the ideal with lattice id i.  Cover pairs are (I, I + {t}) with t
    minimal in the complement of I.
    """
    masks = ideals(P, cap=cap)
    index = {m: i for i, m in enumerate(masks)}
    covers = []
    for m in masks:
        for t in range(P.p):
            bit = 1 << t
            if not (m & bit) and (m | bit) in index:
                covers.append((index[m], index[m | bit]))
    lattice = poset_from_covers(len(masks), covers)
    members = tuple(frozenset(_mask_members(m)) for m in masks)
    return lattice, members


@dataclass(frozen=True)
class Shape:
    """A partition shape; shifted row r is indented r-1 (1-based cells)."""

    rows: tuple
    shifted: bool = False

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows or any(r <= 0 for r in rows):
            raise ValueError("rows must be positive")
        for a, b in zip(rows, rows[1:]):
            if self.shifted:
                if a <= b:
                    raise ValueError("shifted shape needs strictly decreasing rows")
            elif a < b:
                raise ValueError("shape rows must be weakly decreasing")

    @property
    def size(self) -> int:
        return sum(self.rows)

    def cells(self) -> tuple:
        """(row, col) pairs, 1-based, in row-major order."""
        out = []
        for r, length in enumerate(self.rows, start=1):
            start = r if self.shifted else 1
            out.extend((r, c) for c in range(start, start + length))
        return tuple(out)

    def __str__(self):
        kind = "shifted" if self.shifted else "shape"
        return f"{kind}:{','.join(map(str, self.rows))}"


def shape_poset(s: Shape) -> Poset:
    """Cell poset of a (shifted) shape: (r,c) is covered by (r+1,c) and (r,c+1)."""
    cells = s.cells()
    index = {cell: i for i, cell in enumerate(cells)}
    covers = []
    for (r, c), i in index.items():
        for nxt in ((r, c + 1), (r + 1, c)):
            if nxt in index:
                covers.append((i, index[nxt]))
    return poset_from_covers(len(cells), covers)


def dual_poset(P: Poset) -> Poset:
    return poset_from_covers(P.p, [(t, s) for (s, t) in P.covers])


def conjugate_extension(word: Word) -> Word:
    """The word of f* (a linear extension of the dual poset)."""
    return tuple(reversed(word))


def maximal_chains(P: Poset) -> list:
    """All maximal chains (minimal to maximal element), sorted."""
    out = []
    stack = [[t] for t in P.minimals()]
    while stack:
        path = stack.pop()
        ups = P.up[path[-1]]
        if not ups:
            out.append(tuple(path))
        else:
            for t in ups:
                stack.append(path + [t])
    out.sort()
    return out


def is_antichain(P: Poset, A) -> bool:
    A = list(A)
    return all(not P.comparable(s, t) for i, s in enumerate(A) for t in A[i + 1:])


def antichain_cuts_all_chains(P: Poset, A) -> bool:
    """True iff A is an antichain meeting every maximal chain of P."""
    if not is_antichain(P, A):
        return False
    aset = set(A)
    return all(aset.intersection(ch) for ch in maximal_chains(P))


def restrict(P: Poset, keep):
    """Induced subposet on `keep`; returns (poset, old-id list by new id)."""
    keep = sorted(set(keep))
    index = {t: i for i, t in enumerate(keep)}
    pairs = [
        (index[s], index[t])
        for s in keep
        for t in keep
        if s != t and P.leq(s, t)
    ]
    return poset_from_covers(len(keep), pairs), keep


def delete_element(P: Poset, t: int) -> Poset:
    sub, _ = restrict(P, [s for s in range(P.p) if s != t])
    return sub


def is_natural(P: Poset) -> bool:
    """Whether the order relation refines the integer order on ids."""
    return all(s < t for s in range(P.p) for t in range(P.p) if P.less(s, t))


def natural_relabel(P: Poset):
    """Relabel along the lex-first linear extension.

    Returns (poset, relabel) with relabel[old] = new; the result is a natural
    partial order isomorphic to P, and the identity when P is already natural.
    """
    word = next(linear_extensions(P, cap=None))
    relabel = [0] * P.p
    for i, t in enumerate(word):
        relabel[t] = i
    newp = poset_from_covers(P.p, [(relabel[s], relabel[t]) for (s, t) in P.covers])
    return newp, tuple(relabel)

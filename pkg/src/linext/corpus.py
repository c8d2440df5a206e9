"""Bundled corpus of small posets used as test fixtures and by `verify`.

All corpus posets have p <= 8 so exhaustive checks over their linear
extensions stay cheap.
"""

from __future__ import annotations

from .posets import (
    Poset,
    Shape,
    antichain,
    chain,
    disjoint_union,
    ideals_lattice,
    ordinal_sum,
    poset_from_covers,
    shape_poset,
)


def weak_order_s3() -> Poset:
    # e < s1, s2 < s1 s2, s2 s1 < w0: the hexagon.
    # ids: 0 = e, 1 = s1, 2 = s2, 3 = s1s2, 4 = s2s1, 5 = w0
    return poset_from_covers(
        6, [(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 5)]
    )


def boolean_lattice(n: int) -> Poset:
    lattice, _ = ideals_lattice(antichain(n))
    return lattice


def fence(n: int) -> Poset:
    """Zigzag 0 < 1 > 2 < 3 > ..."""
    covers = []
    for i in range(n - 1):
        if i % 2 == 0:
            covers.append((i, i + 1))
        else:
            covers.append((i + 1, i))
    return poset_from_covers(n, covers)


def v_poset() -> Poset:
    return poset_from_covers(3, [(0, 1), (0, 2)])


def corpus() -> dict:
    """Name -> Poset, deterministic order."""
    out = {
        "chain2": chain(2),
        "chain3": chain(3),
        "chain5": chain(5),
        "antichain2": antichain(2),
        "antichain3": antichain(3),
        "antichain4": antichain(4),
        "v": v_poset(),
        "lambda": poset_from_covers(3, [(0, 2), (1, 2)]),
        "fence4": fence(4),
        "fence5": fence(5),
        "diamond": poset_from_covers(4, [(0, 1), (0, 2), (1, 3), (2, 3)]),
        "sum_a2_a2": ordinal_sum(antichain(2), antichain(2)),
        "sum_a2_c2": ordinal_sum(antichain(2), chain(2)),
        "sum_a3_c1": ordinal_sum(antichain(3), chain(1)),
        "union_c2_c3": disjoint_union(chain(2), chain(3)),
        "rect22": shape_poset(Shape((2, 2))),
        "rect23": shape_poset(Shape((3, 3))),
        "rect24": shape_poset(Shape((4, 4))),
        "shape221": shape_poset(Shape((2, 2, 1))),
        "staircase21": shape_poset(Shape((2, 1))),
        "staircase321": shape_poset(Shape((3, 2, 1))),
        "shifted21": shape_poset(Shape((2, 1), shifted=True)),
        "shifted31": shape_poset(Shape((3, 1), shifted=True)),
        "shifted32": shape_poset(Shape((3, 2), shifted=True)),
        "weak_s3": weak_order_s3(),
        "boolean3": boolean_lattice(3),
    }
    return out


def corpus_p_le(limit: int) -> dict:
    return {name: P for name, P in corpus().items() if P.p <= limit}

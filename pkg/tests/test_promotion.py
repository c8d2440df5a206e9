"""Promotion, evacuation, and their interplay on linear extensions."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linext.corpus import corpus_p_le
from linext.posets import (
    antichain,
    chain,
    linear_extensions,
    poset_from_covers,
)
from linext.promotion import (
    compose,
    cycle_lengths,
    dihedral_order,
    dual_evacuate,
    dual_evacuate_via_dual,
    dual_promote,
    evacuate,
    evacuate_by_freezing,
    extension_permutation,
    orbit_structure,
    permutation_order,
    permutation_power,
    principal_chain,
    promote,
    promote_slide,
    promote_word,
    promotion_blocks,
    rotate_blocks,
    tau,
    trajectory,
)

CORPUS = corpus_p_le(8)


# --- tau relations -----------------------------------------------------------

@given(st.sampled_from(sorted(CORPUS)), st.data())
@settings(max_examples=60)
def test_tau_involution_and_commutation(name, data):
    P = CORPUS[name]
    if P.p < 2:
        return
    w = data.draw(st.sampled_from(list(linear_extensions(P))))
    i = data.draw(st.integers(1, P.p - 1))
    assert tau(P, tau(P, w, i), i) == w
    if P.p >= 4:
        j = data.draw(st.integers(1, P.p - 1))
        if abs(i - j) >= 2:
            assert tau(P, tau(P, w, i), j) == tau(P, tau(P, w, j), i)


def test_tau_swaps_only_incomparable():
    P = poset_from_covers(3, [(0, 1)])  # 2 incomparable to both
    assert tau(P, (0, 1, 2), 1) == (0, 1, 2)       # 0 < 1: fixed
    assert tau(P, (0, 1, 2), 2) == (0, 2, 1)       # 1 || 2: swapped


# --- block factorization ------------------------------------------------------

def test_block_rotation_example():
    # word c a b d f e g h j i l k over letters a..l (ids 0..11) with the
    # only forced relations c<f, f<h, h<j; the factorization is
    # (cabd)(feg)(h)(jilk) and one promotion rotates each block left.
    letters = "abcdefghijkl"
    ids = {ch: i for i, ch in enumerate(letters)}
    P = poset_from_covers(12, [(ids["c"], ids["f"]),
                               (ids["f"], ids["h"]),
                               (ids["h"], ids["j"])])
    z = tuple(ids[ch] for ch in "cabdfeghjilk")
    assert P.is_extension(z)
    blocks = promotion_blocks(P, z)
    assert ["".join(letters[t] for t in b) for b in blocks] == [
        "cabd", "feg", "h", "jilk"
    ]
    zd = promote_word(P, z)
    # concatenating the rotated blocks (abdc)(egf)(h)(ilkj)
    assert "".join(letters[t] for t in zd) == "abdcegfhilkj"
    assert rotate_blocks(blocks) == zd


@given(st.sampled_from(sorted(CORPUS)))
def test_blocks_partition_the_word(name):
    P = CORPUS[name]
    for w in linear_extensions(P):
        blocks = promotion_blocks(P, w)
        flat = tuple(t for b in blocks for t in b)
        assert flat == w
        for b in blocks:
            head = b[0]
            assert all(not P.comparable(head, t) for t in b[1:])


# --- promotion equivalences ---------------------------------------------------

@given(st.sampled_from(sorted(CORPUS)))
def test_slide_route_equals_word_route(name):
    P = CORPUS[name]
    for w in linear_extensions(P):
        slid, chain_ = promote_slide(P, w)
        assert slid == promote_word(P, w) == promote(P, w)
        # the promotion chain starts at the first element and is saturated
        assert chain_[0] == w[0]
        for a, b in zip(chain_, chain_[1:]):
            assert (a, b) in set(P.covers)


@given(st.sampled_from(sorted(CORPUS)))
def test_promote_and_dual_promote_are_inverse(name):
    P = CORPUS[name]
    for w in linear_extensions(P):
        assert dual_promote(P, promote(P, w)) == w
        assert promote(P, dual_promote(P, w)) == w


def test_promotion_on_antichain_is_rotation():
    P = antichain(4)
    assert promote(P, (0, 1, 2, 3)) == (1, 2, 3, 0)


# --- evacuation ---------------------------------------------------------------

@given(st.sampled_from(sorted(CORPUS)))
def test_evacuation_is_involution(name):
    P = CORPUS[name]
    for w in linear_extensions(P):
        assert evacuate(P, evacuate(P, w)) == w
        assert dual_evacuate(P, dual_evacuate(P, w)) == w


@given(st.sampled_from(sorted(CORPUS)))
def test_evacuation_routes_agree(name):
    P = CORPUS[name]
    for w in linear_extensions(P):
        e = evacuate(P, w)
        assert evacuate_by_freezing(P, w) == e
        assert dual_evacuate_via_dual(P, w) == dual_evacuate(P, w)


@given(st.sampled_from(sorted(CORPUS)))
def test_promotion_power_p_is_evac_composition(name):
    P = CORPUS[name]
    prom = extension_permutation(P, promote)
    ee = compose(
        extension_permutation(P, evacuate),
        extension_permutation(P, dual_evacuate),
    )
    assert permutation_power(prom, P.p) == ee


@given(st.sampled_from(sorted(CORPUS)))
def test_conjugation_inverts_promotion(name):
    # promote then evacuate = evacuate then dual-promote
    P = CORPUS[name]
    for w in linear_extensions(P):
        assert evacuate(P, promote(P, w)) == dual_promote(P, evacuate(P, w))


# --- chains -------------------------------------------------------------------

@given(st.sampled_from(sorted(k for k, v in CORPUS.items() if v.p <= 7)))
def test_principal_chain_is_trajectory_of_evacuation(name):
    P = CORPUS[name]
    for w in linear_extensions(P):
        assert principal_chain(P, w) == trajectory(P, evacuate(P, w))


def test_trajectory_is_promotion_chain():
    P = poset_from_covers(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    for w in linear_extensions(P):
        _, chain_ = promote_slide(P, w)
        assert trajectory(P, w) == chain_


# --- orbit structure ----------------------------------------------------------

def test_orbit_report_on_square():
    rep = orbit_structure(CORPUS["rect22"], "promote")
    assert rep.size == 2
    assert sorted(rep.cycle_lengths) == [2]
    rep_e = orbit_structure(CORPUS["rect22"], "evacuate")
    assert all(L in (1, 2) for L in rep_e.cycle_lengths)


@given(st.sampled_from(sorted(CORPUS)))
def test_evacuation_cycles_are_short(name):
    P = CORPUS[name]
    rep = orbit_structure(P, "evacuate")
    assert all(L in (1, 2) for L in rep.cycle_lengths)
    assert sum(rep.cycle_lengths) == rep.size


def test_permutation_helpers():
    perm = {1: 2, 2: 3, 3: 1, 4: 4}
    assert sorted(cycle_lengths(perm)) == [1, 3]
    assert permutation_order(perm) == 3
    assert permutation_power(perm, 3) == {k: k for k in perm}


# --- dihedral group -----------------------------------------------------------

def test_dihedral_orders():
    assert dihedral_order(chain(4)) == 1
    assert dihedral_order(CORPUS["rect22"]) == 2
    assert dihedral_order(CORPUS["staircase21"]) == 4
    # antichain: evacuation and its dual are both the reversal, so the
    # product is the identity and the group is Z/2Z
    assert dihedral_order(antichain(3)) == 2

"""Theorem verification suites shared by the CLI and the acceptance tests.

Each suite returns a list of CheckResult rows; a suite passes when every row
does.  All checks are exact (zero tolerance).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import chains, corpus, flags, hecke, promotion, sieve, stats
from .posets import (
    Poset,
    Shape,
    antichain_cuts_all_chains,
    count_extensions,
    delete_element,
    is_antichain,
    linear_extensions,
    natural_relabel,
    shape_poset,
)
from .promotion import (
    compose,
    dual_evacuate,
    evacuate,
    extension_permutation,
    permutation_power,
    promote,
    promote_slide,
    principal_chain,
    tau_word,
    trajectory,
)
from .ratfunc import peval
from .sieve import special_shape_check


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _corpus(limit: int = 8) -> dict:
    return corpus.corpus_p_le(limit)


def verify_thm1(posets: dict = None) -> list:
    """epsilon^2 = 1, promote^p = epsilon epsilon*, and the braid-type
    relation promote epsilon = epsilon promote^{-1} on L(P)."""
    posets = posets or _corpus(8)
    out = []
    for name, P in posets.items():
        ev = extension_permutation(P, evacuate)
        dev = extension_permutation(P, dual_evacuate)
        pr = extension_permutation(P, promote)
        ident = {w: w for w in pr}
        out.append(
            CheckResult(f"{name}: evac involution", compose(ev, ev) == ident)
        )
        out.append(
            CheckResult(
                f"{name}: promote^p = evac dual_evac",
                permutation_power(pr, P.p) == compose(ev, dev),
            )
        )
        inv_pr = {v: k for k, v in pr.items()}
        out.append(
            CheckResult(
                f"{name}: promote evac = evac promote^-1",
                compose(pr, ev) == compose(ev, inv_pr),
            )
        )
    return out


def verify_thm2(posets: dict = None) -> list:
    """trajectory(f evac) equals the principal chain of f."""
    posets = posets or _corpus(7)
    out = []
    for name, P in posets.items():
        ok = all(
            trajectory(P, evacuate(P, w)) == principal_chain(P, w)
            for w in linear_extensions(P)
        )
        out.append(CheckResult(f"{name}: trajectory/principal chain", ok))
    return out


def _all_cutting_antichains(P: Poset):
    for mask in range(1, 1 << P.p):
        A = [t for t in range(P.p) if mask >> t & 1]
        if is_antichain(P, A) and antichain_cuts_all_chains(P, A):
            yield A


def verify_thm3(posets: dict = None) -> list:
    """e(P) = sum over t in A of e(P - t) for every cutting antichain A."""
    posets = posets or _corpus(8)
    out = []
    for name, P in posets.items():
        e = count_extensions(P)
        ok = True
        checked = 0
        for A in _all_cutting_antichains(P):
            checked += 1
            if e != sum(count_extensions(delete_element(P, t)) for t in A):
                ok = False
        out.append(
            CheckResult(f"{name}: cutting antichains", ok, f"{checked} antichains")
        )
    return out


def verify_thm4(posets: dict = None) -> list:
    """Whenever hypothesis (a) or (b) holds, the parity census is balanced."""
    posets = posets or _corpus(8)
    out = []
    for name, P in posets.items():
        rep = stats.sign_balance_report(P)
        applies = rep.thm4a_applies or rep.thm4b_applies
        ok = rep.balanced if applies else True
        tag = (
            f"a={rep.thm4a_applies} b={rep.thm4b_applies} "
            f"even={rep.even} odd={rep.odd}"
        )
        out.append(CheckResult(f"{name}: sign balance", ok, tag))
    return out


def verify_thm5(posets: dict = None) -> list:
    """W'_P(-1) = #dual domino tableaux = #self-evacuating, with the
    constructive bijection verified."""
    posets = posets or _corpus(8)
    out = []
    for name, P in posets.items():
        Q, _ = natural_relabel(P)
        wp = stats.wprime_poly(Q)
        at_minus1 = peval(wp, -1)
        tableaux = stats.dual_domino_tableaux(Q)
        selfev = set(stats.self_evacuating(Q))
        counts_ok = at_minus1 == len(tableaux) == len(selfev)
        images = {
            stats.domino_to_selfevac(Q, stats.domino_word(t)) for t in tableaux
        }
        bij_ok = len(images) == len(tableaux) and images == selfev
        out.append(
            CheckResult(
                f"{name}: three quantities",
                counts_ok,
                f"W'(-1)={at_minus1} dominoes={len(tableaux)} selfevac={len(selfev)}",
            )
        )
        out.append(CheckResult(f"{name}: domino bijection", bij_ok))
    return out


THM6_CASES = (
    ("rectangle", Shape((2, 2))),
    ("rectangle", Shape((3, 3))),
    ("rectangle", Shape((4, 4))),
    ("rectangle", Shape((3, 3, 3))),
    ("rectangle", Shape((4, 4, 4))),
    ("staircase", Shape((2, 1))),
    ("staircase", Shape((3, 2, 1))),
    ("shifted_double_staircase", Shape((3, 1), shifted=True)),
    ("shifted_double_staircase", Shape((5, 3, 1), shifted=True)),
    ("shifted_trapezoid", Shape((4, 2), shifted=True)),
    ("shifted_trapezoid", Shape((5, 3), shifted=True)),
    ("shifted_trapezoid", Shape((6, 4, 2), shifted=True)),
)


def verify_thm6(cases=THM6_CASES) -> list:
    out = []
    for kind, s in cases:
        rep = special_shape_check(s, kind)
        rows = s.rows
        checks = [rep.power_ok, rep.evac_formula_ok]
        if kind == "rectangle" and len(rows) > 1 and rows[0] > 1:
            checks.append(rep.dihedral == 2)
        if kind == "staircase" and len(rows) > 1:
            checks.append(rep.dihedral == 4)
        out.append(
            CheckResult(
                f"{kind} {s}: promote^p behavior",
                all(checks),
                f"e={rep.extensions} dihedral={rep.dihedral}",
            )
        )
    return out


THM7_RECTANGLES = ((2, 2), (2, 3), (2, 4), (2, 5), (3, 3), (3, 4))


def verify_thm7(rectangles=THM7_RECTANGLES) -> list:
    out = []
    for m, n in rectangles:
        rows = sieve.cyclic_sieving_check(m, n)
        ok = all(r.ok for r in rows)
        out.append(
            CheckResult(f"{m}x{n}: e_d = F(zeta^d) for all d", ok)
        )
    return out


def verify_thm8(ns=(2, 3, 4, 5, 6)) -> list:
    return [
        CheckResult(f"n={n}: c_id closed form", hecke.check_thm_cid(n))
        for n in ns
    ]


def verify_thm9(ns=(2, 3, 4, 5)) -> list:
    out = []
    for n in ns:
        rows = hecke.divisibility_report(n)
        ok = all(r[3] for r in rows)
        out.append(CheckResult(f"n={n}: (q-1) divisibility bound", ok))
    if 4 in ns:
        rows = {r[0]: r for r in hecke.divisibility_report(4)}
        w = (2, 3, 1, 4)
        _, bound, order, ok, _ = rows[w]
        out.append(
            CheckResult(
                "n=4 w=2314: non-tight witness",
                ok and bound == 2 and order == 4,
                f"bound={bound} order={order}",
            )
        )
    return out


def verify_lemma1(posets: dict = None) -> list:
    """gamma^2 = 1, delta^p = gamma gamma*, delta gamma = gamma delta^{-1}
    for the word operators on L(P)."""
    posets = posets or _corpus(7)
    out = []
    for name, P in posets.items():
        delta = extension_permutation(P, promote)
        gamma = extension_permutation(P, evacuate)
        gamma_star = extension_permutation(P, dual_evacuate)
        ident = {w: w for w in delta}
        inv_delta = {v: k for k, v in delta.items()}
        ok = (
            compose(gamma, gamma) == ident
            and compose(gamma_star, gamma_star) == ident
            and permutation_power(delta, P.p) == compose(gamma, gamma_star)
            and compose(delta, gamma) == compose(gamma, inv_delta)
        )
        out.append(CheckResult(f"{name}: monoid identities", ok))
    return out


def verify_lemma2(posets: dict = None) -> list:
    """u d*_1 d*_3 ... d*_{2j-1} = v d*_1 ... d*_{2j-1} d_{2j-1} ... d_1
    iff u tau_1 tau_3 ... tau_{2j-1} = v, for all extensions u, v."""
    posets = posets or _corpus(6)
    out = []
    for name, P in posets.items():
        p = P.p
        exts = list(linear_extensions(P))
        ok = True
        for j in range(1, (p - 1) // 2 + 2):
            if 2 * j - 1 > p - 1:
                break
            odd = [k for k in range(1, 2 * j, 2)]

            def lhs_word(w):
                for top in odd:
                    w = tau_word(P, w, range(top, 0, -1))  # delta*_top
                return w

            def rhs_tail(w):
                for top in range(2 * j - 1, 0, -1):
                    w = tau_word(P, w, range(1, top + 1))  # delta_top
                return w

            def cond_ii(w):
                return tau_word(P, w, odd)

            for u in exts:
                for v in exts:
                    lhs = lhs_word(u) == rhs_tail(lhs_word(v))
                    rhs = cond_ii(u) == v
                    if lhs != rhs:
                        ok = False
        out.append(CheckResult(f"{name}: lemma 2 equivalence", ok))
    return out


def _graded_corpus() -> dict:
    from .corpus import boolean_lattice, weak_order_s3
    from .posets import chain as chain_poset, ideals_lattice

    out = {
        "B_3": chains.graded_from_poset(boolean_lattice(3)),
        "weak_s3": chains.graded_from_poset(weak_order_s3()),
        "chain4": chains.graded_from_poset(chain_poset(4)),
    }
    from .corpus import v_poset

    jp, _ = ideals_lattice(v_poset())
    out["J(v)"] = chains.graded_from_poset(jp)
    return out


def verify_eq7(lattices=((2, 2), (2, 3), (3, 2))) -> list:
    """Operator identities for the linear tau: involutivity and distant
    commutation on the graded corpus, plus the Hecke quadratic relation
    (tau_i + 1)(tau_i - q) = 0 on B_n(q)."""
    out = []
    for name, Q in _graded_corpus().items():
        ok = True
        basis = [chains.ChainVector.basis(m) for m in chains.maximal_chains(Q)]
        for i in range(1, Q.height):
            for v in basis:
                if chains.linear_tau(Q, chains.linear_tau(Q, v, i), i) != v:
                    ok = False
            for jj in range(i + 2, Q.height):
                for v in basis:
                    a = chains.linear_tau(Q, chains.linear_tau(Q, v, i), jj)
                    b = chains.linear_tau(Q, chains.linear_tau(Q, v, jj), i)
                    if a != b:
                        ok = False
        out.append(CheckResult(f"{name}: tau_i^2 = 1 and commutation", ok))
    for n, q in lattices:
        lat = flags.subspace_lattice(n, q)
        Q = lat.graded
        ok = True

        def hecke_t(v, i):
            # The involution tau is (q-1-2T)/(q+1); invert for T.
            tv = chains.linear_tau(Q, v, i)
            return (v.scale(Fraction(q - 1, 2))
                    + tv.scale(Fraction(-(q + 1), 2)))

        for i in range(1, Q.height):
            for m in chains.maximal_chains(Q):
                v = chains.ChainVector.basis(m)
                tv = hecke_t(v, i)
                # (T_i + 1)(T_i - q) v = T^2 v + (1-q) T v - q v = 0
                lhs = hecke_t(tv, i) + tv.scale(1 - q) + v.scale(-q)
                if lhs != chains.ChainVector():
                    ok = False
        out.append(CheckResult(f"B_{n}({q}): Hecke quadratic relation", ok))
    return out


def verify_crosspoly(ns=(2, 3, 4, 5)) -> list:
    """Closed-form signed-permutation operators vs the generic slender ones,
    and the dihedral order 2n (n odd) / 4n (n even)."""
    out = []
    for n in ns:
        expected = 2 * n if n % 2 else 4 * n
        out.append(
            CheckResult(
                f"L_{n}: dihedral order",
                chains.signed_group_order(n) == expected,
                f"expected {expected}",
            )
        )
        if n <= 4:
            Q, faces = chains.cross_polytope(n)
            ok = chains.is_slender(Q)
            for m in chains.maximal_chains(Q):
                w = chains.chain_to_signed_perm(faces, m)
                if chains.chain_to_signed_perm(
                    faces, chains.promote_chain(Q, m)
                ) != chains.signed_delta(w):
                    ok = False
                if chains.chain_to_signed_perm(
                    faces, chains.evacuate_chain(Q, m)
                ) != chains.signed_gamma(w):
                    ok = False
                gs = chains.chain_to_signed_perm(
                    faces,
                    _dual_evacuate_chain(Q, m),
                )
                if gs != chains.signed_gamma_star(w):
                    ok = False
            out.append(CheckResult(f"L_{n}: closed forms match generic", ok))
    return out


def _dual_evacuate_chain(Q, m):
    """gamma* as a tau_chain word."""
    for k in range(1, Q.height):
        for i in range(Q.height - 1, k - 1, -1):
            m = chains.tau_chain(Q, m, i)
    return m


def verify_hecke_consistency(cases=((2, 2), (2, 3), (3, 2))) -> list:
    out = []
    for n, q in cases:
        rep = flags.hecke_consistency(n, q)
        out.append(
            CheckResult(
                f"B_{n}({q}): cell coefficients = c_w({q})",
                rep.ok,
                f"{len(rep.cells)} cells",
            )
        )
    return out


def verify_eulerian(_=None) -> list:
    """Eulerian emptiness on B_3 and the slender equality on weak order S_3."""
    from .corpus import boolean_lattice, weak_order_s3

    out = []
    b3 = chains.graded_from_poset(boolean_lattice(3))
    out.append(
        CheckResult(
            "B_3: no dual domino chains", len(chains.dual_domino_chains(b3)) == 0
        )
    )
    out.append(
        CheckResult(
            "B_3: no self-evacuating maximal chains",
            len(chains.self_evacuating_chains(b3)) == 0,
        )
    )
    ws3 = chains.graded_from_poset(weak_order_s3())
    out.append(
        CheckResult(
            "weak order S_3: #selfevac = #dual domino chains",
            len(chains.self_evacuating_chains(ws3))
            == len(chains.dual_domino_chains(ws3)),
            f"count={len(chains.dual_domino_chains(ws3))}",
        )
    )
    return out


def verify_promotion_crosscheck(posets: dict = None) -> list:
    """promote_slide agrees with the tau-word promotion everywhere."""
    posets = posets or _corpus(8)
    out = []
    for name, P in posets.items():
        ok = all(
            promote_slide(P, w)[0] == promote(P, w)
            for w in linear_extensions(P)
        )
        out.append(CheckResult(f"{name}: slide = word promotion", ok))
    return out


SUITES = {
    "thm1": verify_thm1,
    "thm2": verify_thm2,
    "thm3": verify_thm3,
    "thm4": verify_thm4,
    "thm5": verify_thm5,
    "thm6": verify_thm6,
    "thm7": verify_thm7,
    "thm8": verify_thm8,
    "thm9": verify_thm9,
    "lemma1": verify_lemma1,
    "lemma2": verify_lemma2,
    "eq7": verify_eq7,
    "crosspoly": verify_crosspoly,
    "flags": verify_hecke_consistency,
    "eulerian": verify_eulerian,
    "promotion": verify_promotion_crosscheck,
}


def run_suite(suite_id: str) -> list:
    if suite_id not in SUITES:
        raise KeyError(f"unknown verification id {suite_id!r}")
    return SUITES[suite_id]()

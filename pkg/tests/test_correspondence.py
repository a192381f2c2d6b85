"""Tests for the component/critical-subgraph dictionary, persistence of
associated primes, the expansion-witness search, and the membership lemma.

Expected values were frozen from brute-force coloring and divisibility
oracles run before the implementation, plus hand-checked small cases.
"""

import os
from itertools import combinations

import pytest

from coverideal.coloring import chromatic_number, is_critical
from coverideal.correspondence import (
    component_to_Y,
    conjecture_search,
    converse_correspondence,
    persistence_check,
    persistence_sweep,
    probe_expansion,
    technical_lemma_check,
    verify_correspondence,
)
from coverideal.corpus import connected_graphs
from coverideal.graphs import (
    family,
    induced_subgraph,
    maximal_independent_sets,
    mycielski,
    power_expansion,
)
from coverideal.ideals import (
    IrreducibleIdeal,
    cover_ideal,
    irreducible_decomposition,
    power,
)

EXTENDED = os.environ.get("COVERIDEAL_EXTENDED") == "1"


class TestComponentToY:
    def test_single_shadow_per_vertex_at_s1(self):
        comp = IrreducibleIdeal(5, ((1, 1), (2, 1)))
        assert component_to_Y(comp, 1) == frozenset({1, 2})

    def test_full_square_keeps_one_shadow_each(self):
        comp = IrreducibleIdeal(5, tuple((v, 2) for v in range(5)))
        assert component_to_Y(comp, 2) == frozenset(v * 2 for v in range(5))

    def test_27_vertex_set_of_the_19_variable_component(self):
        low = frozenset({0, 2, 4, 6, 9, 11, 13, 15})
        comp = IrreducibleIdeal(
            19, tuple((v, 3 if v in low else 4) for v in range(19))
        )
        Y = component_to_Y(comp, 4)
        want = {v * 4 for v in range(19)} | {v * 4 + 1 for v in low}
        assert Y == frozenset(want)
        assert len(Y) == 27

    def test_exponent_range_enforced(self):
        with pytest.raises(ValueError):
            component_to_Y(IrreducibleIdeal(3, ((0, 3),)), 2)
        with pytest.raises(ValueError):
            component_to_Y(IrreducibleIdeal(3, ((0, 1),)), 0)


class TestVerifyCorrespondence:
    def test_C5_s1_gives_five_verified_edges(self):
        results = verify_correspondence(family("cycle", 5), 1)
        assert len(results) == 5
        for r in results:
            assert len(r.Y) == 2
            assert r.chi == 2
            assert r.verified_critical

    def test_C5_s2_includes_full_component_inducing_C5(self):
        G = family("cycle", 5)
        results = verify_correspondence(G, 2)
        assert len(results) == 11
        assert all(r.verified_critical for r in results)
        full = [r for r in results if len(r.component.exps) == 5]
        assert len(full) == 1
        H = induced_subgraph(power_expansion(G, 2), full[0].Y)
        assert (H.n, H.m) == (5, 5)
        assert full[0].chi == 3

    def test_K3_s2_both_directions(self):
        G = family("complete", 3)
        assert all(r.verified_critical for r in verify_correspondence(G, 2))
        assert converse_correspondence(G, 2) == []

    @pytest.mark.parametrize(
        "G,s",
        [
            (family("cycle", 5), 1),
            (family("cycle", 5), 2),
            (family("cycle", 7), 1),
            (family("complete", 4), 2),
        ],
        ids=["C5s1", "C5s2", "C7s1", "K4s2"],
    )
    def test_converse_finds_nothing_missing(self, G, s):
        assert converse_correspondence(G, s) == []


class TestPersistence:
    @pytest.mark.parametrize(
        "G,s",
        [
            (family("cycle", 5), 1),
            (family("cycle", 5), 2),
            (family("complete", 4), 1),
            (family("complete", 4), 2),
            (family("complete", 4), 3),
        ],
        ids=["C5s1", "C5s2", "K4s1", "K4s2", "K4s3"],
    )
    def test_holds(self, G, s):
        assert persistence_check(G, s) == (True, [])

    def test_invalid_power(self):
        with pytest.raises(ValueError):
            persistence_check(family("cycle", 5), 0)

    def test_sweep_connected_graphs_up_to_five_vertices(self):
        corpus = [G for n in range(2, 6) for G in connected_graphs(n)]
        report = persistence_sweep(corpus, 2)
        assert report.graphs_checked == 30
        assert report.checks_run == 60
        assert report.findings == ()

    def test_sweep_odd_cycles(self):
        report = persistence_sweep(
            [family("cycle", k) for k in (5, 7, 9)], 3
        )
        assert report.checks_run == 9
        assert report.findings == ()

    def test_sweep_rejects_bad_smax(self):
        with pytest.raises(ValueError):
            persistence_sweep([family("cycle", 5)], 0)

    @pytest.mark.skipif(
        not EXTENDED, reason="set COVERIDEAL_EXTENDED=1 to run the heavy check"
    )
    def test_sweep_mycielski_C9(self):
        report = persistence_sweep([mycielski(family("cycle", 9))], 1)
        assert report.findings == ()


class TestConjectureSearch:
    def test_C5_finds_maximal_independent_pair(self):
        found, witness, exhausted = conjecture_search(family("cycle", 5))
        assert found and not exhausted
        assert witness.W == frozenset({0, 2})
        assert witness.is_maximal_independent
        assert witness.expanded_chi == 4
        assert witness.expanded_critical

    def test_C5_displayed_witness_also_works(self):
        w = probe_expansion(family("cycle", 5), {1, 3})
        assert w.is_maximal_independent
        assert w.expanded_chi == 4
        assert w.expanded_critical

    def test_mycielski_C9_finds_the_x_y_witness(self):
        found, witness, exhausted = conjecture_search(mycielski(family("cycle", 9)))
        assert found and not exhausted
        assert witness.W == frozenset({0, 2, 4, 6, 9, 11, 13, 15})
        assert witness.expanded_chi == 5
        assert witness.expanded_critical

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_cliques_expand_at_one_vertex(self, n):
        found, witness, _ = conjecture_search(family("complete", n))
        assert found
        assert len(witness.W) == 1
        assert witness.expanded_chi == n + 1

    def test_non_critical_graph_rejected(self):
        with pytest.raises(ValueError):
            conjecture_search(family("cycle", 6))

    def test_unknown_mode_rejected(self):
        with pytest.raises(ValueError):
            conjecture_search(family("cycle", 5), mode="everything")

    def test_all_subsets_mode_agrees_when_maximal_suffices(self):
        for G in (family("cycle", 7), family("complete", 3)):
            a = conjecture_search(G)
            b = conjecture_search(G, mode="all_subsets")
            assert a == b


class TestProbeExpansion:
    def test_C9_spaced_triple_is_maximal_but_not_a_witness(self):
        w = probe_expansion(family("cycle", 9), {1, 4, 7})
        assert w.is_maximal_independent
        assert w.expanded_chi == 3
        assert not w.expanded_critical

    def test_C9_single_vertex_keeps_chi(self):
        w = probe_expansion(family("cycle", 9), {1})
        assert not w.is_maximal_independent
        assert w.expanded_chi == 3

    def test_mycielski_C9_shadow_layer_keeps_chi(self):
        w = probe_expansion(mycielski(family("cycle", 9)), set(range(9, 18)))
        assert w.is_maximal_independent
        assert w.expanded_chi == 4
        assert not w.expanded_critical

    @pytest.mark.parametrize(
        "G",
        [family("cycle", 5), family("cycle", 7), family("complete", 4)],
        ids=["C5", "C7", "K4"],
    )
    def test_non_maximal_independent_sets_keep_chi(self, G):
        chi, _ = chromatic_number(G)
        maximal = set(maximal_independent_sets(G))
        for r in range(G.n + 1):
            for c in combinations(range(G.n), r):
                W = frozenset(c)
                if any(u in G.adj[v] for u in W for v in W) or W in maximal:
                    continue
                assert probe_expansion(G, W).expanded_chi == chi


class TestTechnicalLemma:
    @pytest.mark.parametrize(
        "G,W,b",
        [
            (family("cycle", 5), {1, 3}, 1),
            (family("cycle", 5), frozenset(), 1),
            (family("complete", 3), {0}, 1),
            (family("cycle", 5), {0, 2}, 2),
            (family("complete", 4), {2}, 2),
            (family("cycle", 7), {0, 2, 4}, 1),
        ],
    )
    def test_membership_holds(self, G, W, b):
        assert technical_lemma_check(G, W, b) is True

    def test_invalid_fold(self):
        with pytest.raises(ValueError):
            technical_lemma_check(family("cycle", 5), {1, 3}, 0)


def _witness_shift_component(H, comp, s):
    """Shifted exponent vector from a found witness on the component's graph."""
    found, witness, _ = conjecture_search(H, mode="all_subsets")
    assert found, "every component's graph should admit a witness at this scale"
    bases = [H.labels[w][0] for w in witness.W]
    exps = []
    for v, a in comp.exps:
        b_v = bases.count(v)
        assert 0 <= b_v <= a
        exps.append((v, a - b_v + 1))
    return IrreducibleIdeal(comp.nvars, tuple(exps))


class TestWitnessShiftsComponentsForward:
    @pytest.mark.parametrize(
        "G,s",
        [
            (family("cycle", 5), 1),
            (family("cycle", 5), 2),
            (family("complete", 3), 1),
            (family("complete", 3), 2),
            (family("cycle", 7), 1),
        ],
        ids=["C5s1", "C5s2", "K3s1", "K3s2", "C7s1"],
    )
    def test_shifted_component_lands_in_next_power(self, G, s):
        J = cover_ideal(G)
        Gs = power_expansion(G, s)
        next_decomp = set(irreducible_decomposition(power(J, s + 1)))
        for comp in irreducible_decomposition(power(J, s)):
            Y = component_to_Y(comp, s)
            H = induced_subgraph(Gs, Y)
            critical, chi, _ = is_critical(H)
            assert critical and chi == s + 1
            shifted = _witness_shift_component(H, comp, s)
            assert all(1 <= e <= s + 1 for _, e in shifted.exps)
            assert shifted in next_decomp

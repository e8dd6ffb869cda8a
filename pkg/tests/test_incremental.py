import random

import pytest

from conftest import TOY_STEP1, TOY_STEP2
from genutil import random_delta, random_graph

from lapstream.centrality import lap_cent, lap_cent_unweighted, lap_cent_weighted
from lapstream.errors import DeltaError, MissingEdgeError, SelfLoopError
from lapstream.graph import Edge, Graph
from lapstream.incremental import (
    AffectedSets,
    EdgeDelta,
    affected_nodes,
    apply_delta,
    lap_cent_add_remove,
    lap_cent_weighted_add_remove,
    run_evolving,
)


class TestAffectedNodes:
    def test_toy_addition(self, toy_graph):
        sets = affected_nodes(toy_graph, EdgeDelta(adds=[Edge(4, 6)]))
        assert sets.touched == {4, 6}
        assert sets.recompute == {4, 5, 6, 7}
        assert toy_graph.has_edge(4, 6)  # delta fully applied on return

    def test_empty_delta(self, toy_graph):
        sets = affected_nodes(toy_graph, EdgeDelta())
        assert sets == AffectedSets(set(), set())

    def test_neighbors_gathered_before_removal(self):
        g = Graph([(1, 2)])
        sets = affected_nodes(g, EdgeDelta(removes=[(1, 2)]))
        assert sets.touched == {1, 2}
        assert sets.recompute == {1, 2}
        assert g.num_edges == 0

    def test_absent_remove_fails_fast(self, toy_graph):
        with pytest.raises(MissingEdgeError):
            affected_nodes(toy_graph, EdgeDelta(removes=[(1, 6)]))

    def test_self_loop_add_rejected(self, toy_graph):
        with pytest.raises(SelfLoopError):
            affected_nodes(toy_graph, EdgeDelta(adds=[Edge(3, 3)]))

    def test_add_and_remove_same_edge_nets_to_removal(self, toy_graph):
        before = toy_graph.copy()
        delta = EdgeDelta(adds=[Edge(1, 6)], removes=[(1, 6)])
        sets = affected_nodes(toy_graph, delta)
        assert toy_graph == before
        # both endpoints and their union-graph neighbors still recomputed
        assert {1, 6} <= sets.recompute

    def test_touched_subset_of_recompute_random(self):
        rng = random.Random(4)
        for _ in range(25):
            g = random_graph(rng, rng.randint(4, 40), rng.randint(3, 80))
            work = g.copy()
            sets = affected_nodes(work, random_delta(rng, g))
            assert sets.touched <= sets.recompute
            assert sets.recompute <= set(work.nodes())


class TestAddRemove:
    def test_toy_step(self, toy_graph):
        prev = lap_cent_unweighted(toy_graph)
        assert prev.values == TOY_STEP1
        cmap, computed, g = lap_cent_add_remove(toy_graph, EdgeDelta(adds=[Edge(4, 6)]), prev)
        assert cmap.values == TOY_STEP2
        assert computed == 4
        assert cmap.computed_count == 4
        assert g is toy_graph

    def test_empty_delta_returns_prev_values(self, toy_graph):
        prev = lap_cent_unweighted(toy_graph)
        cmap, computed, _ = lap_cent_add_remove(toy_graph, EdgeDelta(), prev)
        assert computed == 0
        assert cmap.values == prev.values

    def test_copy_on_write_keeps_history(self, toy_graph):
        prev = lap_cent_unweighted(toy_graph)
        snapshot = dict(prev.values)
        lap_cent_add_remove(toy_graph, EdgeDelta(adds=[Edge(4, 6)]), prev)
        assert prev.values == snapshot

    def test_in_place_updates_prev(self, toy_graph):
        prev = lap_cent_unweighted(toy_graph)
        cmap, _, _ = lap_cent_add_remove(
            toy_graph, EdgeDelta(adds=[Edge(4, 6)]), prev, in_place=True
        )
        assert cmap.values is prev.values
        assert prev.values == TOY_STEP2

    def test_random_delta_matches_batch(self):
        rng = random.Random(17)
        g = random_graph(rng, 50, 120)
        prev = lap_cent_unweighted(g)
        delta = random_delta(rng, g)
        cmap, computed, _ = lap_cent_add_remove(g, delta, prev)
        assert cmap.values == lap_cent_unweighted(g).values
        assert computed <= g.num_nodes

    def test_new_nodes_get_entries(self):
        g = Graph([(1, 2)])
        prev = lap_cent_unweighted(g)
        cmap, _, _ = lap_cent_add_remove(g, EdgeDelta(adds=[Edge(8, 9)]), prev)
        assert cmap.values[8] == 4
        assert cmap.values[9] == 4

    def test_isolated_nodes_keep_zero_entries(self):
        g = Graph([(1, 2), (2, 3)])
        prev = lap_cent_unweighted(g)
        cmap, _, _ = lap_cent_add_remove(g, EdgeDelta(removes=[(1, 2), (2, 3)]), prev)
        assert cmap.values == {1: 0, 2: 0, 3: 0}


class TestWeightedAddRemove:
    def test_unit_weights_match_unweighted(self, toy_graph):
        unit = Graph()
        for e in toy_graph.edges():
            unit.add_edge(e.u, e.v, 1.0)
        prev = lap_cent_weighted(unit)
        cmap, computed, _ = lap_cent_weighted_add_remove(
            unit, EdgeDelta(adds=[Edge(4, 6, 1.0)]), prev
        )
        assert cmap.values == {v: float(x) for v, x in TOY_STEP2.items()}
        assert computed == 4

    def test_star_to_triangle(self, weighted_star):
        prev = lap_cent_weighted(weighted_star)
        delta = EdgeDelta(adds=[Edge(1, 2, 1.0)])
        cmap, _, _ = lap_cent_weighted_add_remove(weighted_star, delta, prev)
        assert cmap.values == lap_cent_weighted(weighted_star).values

    def test_weight_upsert_recomputes_neighborhood(self):
        g = Graph()
        g.add_edge(0, 1, 2.0)
        g.add_edge(1, 2, 1.0)
        prev = lap_cent_weighted(g)
        cmap, computed, _ = lap_cent_weighted_add_remove(
            g, EdgeDelta(adds=[Edge(0, 1, 5.0)]), prev
        )
        assert cmap.values == lap_cent_weighted(g).values
        assert computed == 3  # 0, 1 and 1's neighbor 2

    def test_weighted_removal(self, weighted_star):
        prev = lap_cent_weighted(weighted_star)
        cmap, computed, _ = lap_cent_weighted_add_remove(
            weighted_star, EdgeDelta(removes=[(0, 1)]), prev
        )
        # remaining graph: 0-2 with weight 3, node 1 isolated
        assert cmap.values == {0: 36.0, 1: 0.0, 2: 36.0}
        assert computed == 3
        assert cmap.values == lap_cent_weighted(weighted_star).values

    def test_empty_delta(self, weighted_star):
        prev = lap_cent_weighted(weighted_star)
        cmap, computed, _ = lap_cent_weighted_add_remove(weighted_star, EdgeDelta(), prev)
        assert computed == 0
        assert cmap.values == prev.values


class TestRunEvolving:
    def test_toy_dynamic_work(self, toy_graph):
        results = run_evolving(toy_graph, [EdgeDelta(adds=[Edge(4, 6)])], mode="dynamic")
        assert [r.computed_count for r in results] == [7, 4]
        assert sum(r.computed_count for r in results) == 11
        assert results[0].values == TOY_STEP1
        assert results[1].values == TOY_STEP2

    def test_toy_batch_work(self, toy_graph):
        results = run_evolving(toy_graph, [EdgeDelta(adds=[Edge(4, 6)])], mode="batch")
        assert [r.computed_count for r in results] == [7, 7]
        assert sum(r.computed_count for r in results) == 14

    def test_zero_deltas(self, toy_graph):
        results = run_evolving(toy_graph, [], mode="dynamic")
        assert len(results) == 1
        assert results[0].values == TOY_STEP1

    def test_bad_delta_aborts_with_step(self, toy_graph):
        deltas = [EdgeDelta(adds=[Edge(4, 6)]), EdgeDelta(removes=[(1, 5)])]
        with pytest.raises(DeltaError) as err:
            run_evolving(toy_graph, deltas, mode="dynamic")
        assert err.value.step == 2

    def test_unknown_mode(self, toy_graph):
        with pytest.raises(ValueError):
            run_evolving(toy_graph, [], mode="incremental")

    def test_determinism(self):
        rng = random.Random(31)
        g = random_graph(rng, 30, 60)
        deltas = []
        sim = g.copy()
        for _ in range(10):
            d = random_delta(rng, sim)
            deltas.append(d)
            apply_delta(sim, d)
        a = run_evolving(g.copy(), deltas, mode="dynamic")
        b = run_evolving(g.copy(), deltas, mode="dynamic")
        assert [r.values for r in a] == [r.values for r in b]
        assert [r.computed_count for r in a] == [r.computed_count for r in b]


def _random_run(seed, variant, steps=12):
    """Random evolving run returning per-step (dynamic, batch, delta, pre-graph)."""
    rng = random.Random(seed)
    integer = seed % 2 == 0
    g = random_graph(rng, rng.randint(6, 60), rng.randint(4, 120), integer)
    deltas = []
    sim = g.copy()
    for _ in range(steps):
        d = random_delta(rng, sim, integer_weights=integer)
        deltas.append(d)
        apply_delta(sim, d)
    dynamic = run_evolving(g.copy(), deltas, mode="dynamic", variant=variant)
    batch = run_evolving(g.copy(), deltas, mode="batch", variant=variant)
    return g, deltas, dynamic, batch, integer


class TestOracleEquivalence:
    """Dynamic maps must equal full batch recomputation at every step."""

    @pytest.mark.parametrize("variant", ["unweighted", "weighted"])
    @pytest.mark.parametrize("seed", range(10))
    def test_dynamic_equals_batch(self, seed, variant):
        _, _, dynamic, batch, integer = _random_run(seed, variant)
        for dyn, full in zip(dynamic, batch):
            if variant == "unweighted" or integer:
                assert dyn.values == full.values
            else:
                assert dyn.values.keys() == full.values.keys()
                for v in full.values:
                    assert dyn.values[v] == pytest.approx(full.values[v], rel=1e-9)

    @pytest.mark.parametrize("seed", range(6))
    def test_work_bound(self, seed):
        g, deltas, dynamic, _, _ = _random_run(seed, "unweighted")
        sim = g.copy()
        for step, delta in enumerate(deltas, start=1):
            union = sim.copy()
            for e in delta.adds:
                union.add_edge(e.u, e.v, e.weight)
            m_prime = delta.num_changes
            bound = min(union.num_nodes, 2 * m_prime + 2 * m_prime * union.stats().max_degree)
            assert dynamic[step].computed_count <= bound
            apply_delta(sim, delta)

    @pytest.mark.parametrize("seed", range(6))
    def test_untouched_nodes_unchanged(self, seed):
        """Nodes outside the recompute set keep their exact previous value."""
        g, deltas, dynamic, _, _ = _random_run(seed, "unweighted")
        sim = g.copy()
        for step, delta in enumerate(deltas, start=1):
            sets = affected_nodes(sim.copy(), delta)
            for v in dynamic[step - 1].values.keys() - sets.recompute:
                assert dynamic[step].values[v] == dynamic[step - 1].values[v]
            apply_delta(sim, delta)

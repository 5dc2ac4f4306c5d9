import math

import pytest

from temporal_betweenness import (
    EstimatorConfig,
    delta_sweep,
    exact_betweenness,
    from_edges,
    topk_jaccard,
)


class TestTopkJaccard:
    def test_identical_maps_give_one(self):
        scores = {"a": 0.5, "b": 0.4, "c": 0.3, "d": 0.2}
        for k in range(1, 5):
            comparison = topk_jaccard(scores, scores, k)
            assert comparison.jaccard == 1.0
            assert comparison.intersection == k

    def test_disjoint_top_sets_give_zero(self):
        a = {"a": 0.9, "b": 0.8, "c": 0.1, "d": 0.1}
        b = {"a": 0.1, "b": 0.1, "c": 0.9, "d": 0.8}
        comparison = topk_jaccard(a, b, 2)
        assert comparison.jaccard == 0.0
        assert comparison.intersection == 0

    def test_partial_overlap(self):
        a = {"a": 3.0, "b": 2.0, "c": 1.0, "d": 0.5}
        b = {"a": 3.0, "d": 2.0, "c": 1.0, "b": 0.5}
        comparison = topk_jaccard(a, b, 2)
        assert comparison.intersection == 1  # {a}
        assert comparison.jaccard == pytest.approx(1 / 3)

    def test_ties_break_by_ascending_label(self):
        scores = {"10": 1.0, "2": 1.0, "3": 1.0}
        comparison = topk_jaccard(scores, scores, 2)
        assert comparison.top_a == ["2", "3"]  # numeric-aware order

    def test_zero_scores_never_enter_top_sets(self):
        a = {"a": 1.0, "b": 0.0, "c": 0.0}
        with pytest.warns(UserWarning, match="truncated"):
            comparison = topk_jaccard(a, a, 2)
        assert comparison.top_a == ["a"]
        assert comparison.jaccard == 1.0

    def test_k_must_not_exceed_node_count(self):
        scores = {"a": 1.0, "b": 0.5}
        with pytest.raises(ValueError):
            topk_jaccard(scores, scores, 3)

    def test_mismatched_node_sets_rejected(self):
        with pytest.raises(ValueError):
            topk_jaccard({"a": 1.0}, {"b": 1.0}, 1)

    def test_invariant_under_monotone_transforms(self):
        # strictly increasing, zero-preserving maps leave rankings (and the
        # zero filter) untouched
        a = {"a": 0.7, "b": 0.4, "c": 0.2, "d": 0.1, "e": 0.0}
        b = {"a": 0.1, "b": 0.6, "c": 0.5, "d": 0.0, "e": 0.3}
        base = topk_jaccard(a, b, 3)
        for transform in (
            lambda x: 3.0 * x,
            lambda x: x * x,
            lambda x: x / (1.0 + x),
            lambda x: math.expm1(x),
        ):
            scaled_a = {k: transform(v) for k, v in a.items()}
            scaled_b = {k: transform(v) for k, v in b.items()}
            assert topk_jaccard(scaled_a, b, 3) == base
            assert topk_jaccard(a, scaled_b, 3) == base


class TestDeltaSweep:
    def test_saturated_column_equals_stp(self, cycle_network):
        span = cycle_network.timespan
        sweep = delta_sweep(cycle_network, [1, span])
        assert sweep.restless_values[-1] == sweep.stp_values

    def test_cycle_detour_node_scores_only_under_tight_delta(self, cycle_network):
        sweep = delta_sweep(cycle_network, [1, 100])
        c = cycle_network.index_of("c")
        tight, loose = sweep.restless_values
        assert tight[c] > 0
        assert loose[c] == 0.0

    def test_single_edge_network_all_zero(self):
        net = from_edges([("a", "b", 5)])
        sweep = delta_sweep(net, [1, 10])
        assert set(sweep.stp_values) == {0.0}
        for column in sweep.restless_values:
            assert set(column) == {0.0}

    def test_estimate_mode_matches_exact_when_exhaustive(self, cycle_network):
        config = EstimatorConfig(exhaustive=True)
        estimated = delta_sweep(cycle_network, [1], config)
        exact = delta_sweep(cycle_network, [1])
        assert estimated.mode == "estimate" and exact.mode == "exact"
        for a, b in zip(estimated.restless_values[0], exact.restless_values[0]):
            assert a == pytest.approx(b, abs=1e-12)

    def test_rejects_bad_delta_lists(self, cycle_network):
        with pytest.raises(ValueError):
            delta_sweep(cycle_network, [])
        with pytest.raises(ValueError):
            delta_sweep(cycle_network, [5, 5])
        with pytest.raises(ValueError):
            delta_sweep(cycle_network, [5, 3])

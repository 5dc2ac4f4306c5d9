import random

import pytest

from temporal_betweenness import (
    WalkExplosionError,
    accumulate_rtw,
    accumulate_stp,
    build_adjacency,
    compute_rtw,
    compute_stp,
    contribution_fractions,
    enumerate_optimal,
    from_edges,
)

from conftest import make_random_network


class TestComputeRtw:
    def test_gap_violation_blocks_path(self):
        net = from_edges([("a", "b", 1), ("b", "c", 20)])
        adj = build_adjacency(net)
        assert not compute_rtw(adj, 0, 2, 5).reached

    def test_gap_exactly_delta_is_allowed(self):
        net = from_edges([("a", "b", 1), ("b", "c", 20)])
        adj = build_adjacency(net)
        state = compute_rtw(adj, 0, 2, 19)
        assert state.reached
        assert state.dest_dist == 2
        assert state.node_sigma[2] == 1

    def test_first_hop_is_exempt_from_delta(self):
        net = from_edges([("a", "b", 1000), ("b", "c", 1001)])
        adj = build_adjacency(net)
        assert compute_rtw(adj, 0, 2, 1).reached

    def test_cycle_walk_is_shortest_under_tight_delta(self, cycle_network):
        adj = build_adjacency(cycle_network)
        state = compute_rtw(adj, 0, 3, 1)
        assert state.reached
        assert state.dest_dist == 4
        assert state.node_sigma[3] == 1

    def test_negative_delta_rejected(self, cycle_network):
        adj = build_adjacency(cycle_network)
        with pytest.raises(ValueError):
            compute_rtw(adj, 0, 3, -1)


class TestAccumulateRtw:
    def test_cycle_credits_each_node_once(self, cycle_network):
        adj = build_adjacency(cycle_network)
        state = compute_rtw(adj, 0, 3, 1)
        assert accumulate_rtw(state) == {1: 1.0, 2: 1.0}

    def test_loose_delta_shortcuts_the_cycle(self, cycle_network):
        adj = build_adjacency(cycle_network)
        state = compute_rtw(adj, 0, 3, 100)
        assert state.dest_dist == 2
        assert accumulate_rtw(state) == {1: 1.0}

    def test_simple_path_matches_stp_accumulation(self, diamond_network):
        adj = build_adjacency(diamond_network)
        restless = accumulate_rtw(compute_rtw(adj, 0, 3, 10))
        plain = accumulate_stp(compute_stp(adj, 0, 3))
        assert restless == plain

    def test_requires_reached_state(self):
        net = from_edges([("a", "b", 1), ("b", "c", 20)])
        adj = build_adjacency(net)
        with pytest.raises(ValueError):
            accumulate_rtw(compute_rtw(adj, 0, 2, 5))

    def test_explosion_guard_names_pair(self, diamond_network):
        adj = build_adjacency(diamond_network)
        state = compute_rtw(adj, 0, 3, 10)
        with pytest.raises(WalkExplosionError, match=r"\(0, 3\)"):
            accumulate_rtw(state, limit=2)


class TestWalkOracleEquivalence:
    def test_contributions_match_walk_enumeration(self):
        rng = random.Random(97)
        for seed in range(40):
            net = make_random_network(seed, 6, 14)
            adj = build_adjacency(net)
            n = net.node_count
            delta = rng.choice([1, 3, 10, int(net.timespan)])
            for s in range(n):
                for z in range(n):
                    if s == z:
                        continue
                    state = compute_rtw(adj, s, z, delta)
                    walks = enumerate_optimal(net, s, z, "rtp", delta)
                    if not walks:
                        assert not state.reached
                        continue
                    assert state.reached
                    assert state.dest_dist == len(walks[0])
                    assert state.node_sigma[z] == len(walks)
                    expected = contribution_fractions(walks, s, z)
                    got = accumulate_rtw(state)
                    assert got.keys() == expected.keys()
                    for node, value in expected.items():
                        assert got[node] == pytest.approx(value, abs=1e-9)

    def test_contribution_mass_matches_average_internal_count(self):
        for seed in range(20):
            net = make_random_network(seed, 6, 12)
            adj = build_adjacency(net)
            n = net.node_count
            for s in range(n):
                for z in range(n):
                    if s == z:
                        continue
                    state = compute_rtw(adj, s, z, 3)
                    walks = enumerate_optimal(net, s, z, "rtp", 3)
                    if not walks:
                        continue
                    internal_total = sum(
                        len(({u for u, _, _ in w} | {v for _, v, _ in w}) - {s, z})
                        for w in walks
                    )
                    got = sum(accumulate_rtw(state).values())
                    assert got == pytest.approx(
                        internal_total / len(walks), abs=1e-9
                    )


class TestDeltaProperties:
    def test_saturation_matches_stp_exactly(self):
        for seed in range(40):
            net = make_random_network(seed, 6, 14)
            adj = build_adjacency(net)
            n = net.node_count
            span = net.timespan
            for s in range(n):
                for z in range(n):
                    if s == z:
                        continue
                    stp_state = compute_stp(adj, s, z)
                    rtw_state = compute_rtw(adj, s, z, span)
                    assert stp_state.dest_dist == rtw_state.dest_dist
                    if not stp_state.reached:
                        continue
                    assert stp_state.node_sigma[z] == rtw_state.node_sigma[z]
                    assert accumulate_stp(stp_state) == accumulate_rtw(rtw_state)

    def test_reachability_monotone_in_delta(self):
        rng = random.Random(11)
        for seed in range(30):
            net = make_random_network(seed, 6, 14)
            adj = build_adjacency(net)
            n = net.node_count
            d1 = rng.randint(0, 20)
            d2 = d1 + rng.randint(0, 30)
            for s in range(n):
                for z in range(n):
                    if s == z:
                        continue
                    if compute_rtw(adj, s, z, d1).reached:
                        assert compute_rtw(adj, s, z, d2).reached

import pytest
from hypothesis import given, settings

from conftest import G1_DIST, graphs_with_source
from test_certify import nx_distances
from sspcert import (
    INF,
    Distances,
    Graph,
    NegativeCycle,
    bellman_ford,
    brute_force_solve,
    certify,
    verify_negative_cycle_witness,
)
from sspcert.errors import TooLargeForBruteForce, VertexOutOfRange
from sspcert.solvers import relaxed_labels


@pytest.mark.parametrize("solve", [bellman_ford, brute_force_solve])
class TestBothSolvers:
    def test_g1(self, solve, g1):
        assert solve(g1, 0) == Distances(tuple(G1_DIST))

    def test_negative_cycle(self, solve, neg3):
        out = solve(neg3, 0)
        assert isinstance(out, NegativeCycle)
        assert sorted(out.arcs) == [1, 2]
        assert out.weight == -2
        assert set(out.vertices(neg3)) == {1, 2}

    def test_nothing_reachable(self, solve):
        assert solve(Graph(3, [(1, 2, 7)]), 0).cert == (0, INF, INF)

    def test_singleton(self, solve):
        assert solve(Graph(1, []), 0).cert == (0,)

    def test_negative_self_loop(self, solve):
        out = solve(Graph(2, [(0, 0, -1)]), 0)
        assert out == NegativeCycle((0,))

    def test_unreachable_negative_cycle_ignored(self, solve):
        g = Graph(3, [(0, 1, 4), (2, 2, -3)])
        assert solve(g, 0).cert == (0, 4, INF)

    def test_bad_source(self, solve, g1):
        with pytest.raises(VertexOutOfRange):
            solve(g1, -1)


def test_brute_force_size_limit():
    brute_force_solve(Graph(10, []), 0)
    with pytest.raises(TooLargeForBruteForce):
        brute_force_solve(Graph(11, []), 0)


def test_brute_force_picks_lightest_cycle():
    # cycles: 0->1->0 weighs -1, self-loop at 2 weighs -5
    g = Graph(3, [(0, 1, 1), (1, 0, -2), (1, 2, 0), (2, 2, -5)])
    out = brute_force_solve(g, 0)
    assert out.arcs == (3,) and out.weight == -5


def test_relaxed_labels_after_rounds(neg3):
    assert relaxed_labels(neg3, 0, 0) == [0, INF, INF]
    # in-place updates: arc (2,1) already sees D[2] = -1 within the first round
    assert relaxed_labels(neg3, 0, 1) == [0, -1, -1]


@settings(max_examples=400)
@given(graphs_with_source(max_n=8, max_m=20, wmin=-8, wmax=8))
def test_oracles_agree(gs):
    g, s = gs
    bf, brute, ref = bellman_ford(g, s), brute_force_solve(g, s), nx_distances(g, s)
    if ref is None:
        assert isinstance(bf, NegativeCycle) and isinstance(brute, NegativeCycle)
        assert verify_negative_cycle_witness(g, s, bf)
        assert verify_negative_cycle_witness(g, s, brute)
    else:
        assert bf == brute == Distances(tuple(ref))


@settings(max_examples=200)
@given(graphs_with_source(max_n=30, max_m=90, wmin=-3, wmax=20))
def test_prover_verifier_loop(gs):
    g, s = gs
    out = bellman_ford(g, s)
    if isinstance(out, NegativeCycle):
        assert verify_negative_cycle_witness(g, s, out)
        assert nx_distances(g, s) is None
        return
    assert list(out.cert) == nx_distances(g, s)
    assert certify(g, s, out.cert).accepted
    for u, v, w in g.arcs:
        if out.cert[u] != INF:
            assert out.cert[v] <= out.cert[u] + w

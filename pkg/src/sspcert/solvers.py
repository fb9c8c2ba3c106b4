"""Reference provers: Bellman-Ford and an exhaustive solver for tiny graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .certify import INF, Certificate, NegativeCycle
from .errors import TooLargeForBruteForce
from .graph import Graph

BRUTE_FORCE_MAX_N = 10


@dataclass(frozen=True)
class Distances:
    cert: Certificate


SolveOutcome = Union[Distances, NegativeCycle]


def bellman_ford(g: Graph, s: int) -> SolveOutcome:
    """Single-source shortest paths with negative-cycle extraction.

    Relaxes every arc (in adjacency order, skipping vertices still at
    infinity) for up to ``n - 1`` rounds, stopping early once a round changes
    nothing.  If round ``n`` still relaxes an arc, the predecessor walk from
    that arc's head yields a negative cycle reachable from ``s``.
    """
    g.check_vertex(s)
    n = g.n
    offsets, heads, weights, arc_ids = g.offsets, g.adj_heads, g.adj_weights, g.adj_arcs
    dist: list = [INF] * n
    dist[s] = 0
    pred = [-1] * n

    for rnd in range(1, n + 1):
        changed = False
        for u in range(n):
            du = dist[u]
            if du == INF:
                continue
            for k in range(offsets[u], offsets[u + 1]):
                v = heads[k]
                nd = du + weights[k]
                if nd < dist[v]:
                    dist[v] = nd
                    pred[v] = arc_ids[k]
                    changed = True
                    if rnd == n:
                        return _extract_cycle(g, pred, v)
        if not changed:
            break
    return Distances(Certificate(dist))


def _extract_cycle(g: Graph, pred: list[int], v: int) -> NegativeCycle:
    tails = g.tails
    # n backward steps are guaranteed to land on the predecessor cycle
    for _ in range(g.n):
        if pred[v] < 0:
            raise RuntimeError("predecessor walk left the graph; relaxation bookkeeping is broken")
        v = tails[pred[v]]
    start = v
    back = []
    while True:
        a = pred[v]
        back.append(a)
        v = tails[a]
        if v == start:
            break
    arcs = tuple(reversed(back))
    return NegativeCycle(arcs, sum(g.weights[a] for a in arcs))


def brute_force_solve(g: Graph, s: int) -> SolveOutcome:
    """Exhaustive solver: enumerates every simple cycle and every simple path.

    Only meant as an oracle for graphs with at most 10 vertices.  Among
    parallel arcs only the lightest (lowest id on ties) can matter for
    minimum-weight paths and cycles, so the others are dropped up front.
    """
    g.check_vertex(s)
    n = g.n
    if n > BRUTE_FORCE_MAX_N:
        raise TooLargeForBruteForce(f"brute force limited to n <= {BRUTE_FORCE_MAX_N}, got {n}")

    best: dict[tuple[int, int], int] = {}
    for a, (u, v, w) in enumerate(g.arcs):
        b = best.get((u, v))
        if b is None or w < g.weights[b]:
            best[(u, v)] = a
    succ: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
    for (u, v), a in sorted(best.items()):
        succ[u].append((v, g.weights[a], a))

    # simple paths from s: minimum weight per endpoint, and the reachable set
    dist: list = [INF] * n
    on_path = [False] * n

    def paths(u: int, length: int) -> None:
        if length < dist[u]:
            dist[u] = length
        on_path[u] = True
        for v, w, _ in succ[u]:
            if not on_path[v]:
                paths(v, length + w)
        on_path[u] = False

    paths(s, 0)

    # simple cycles, each rooted at its smallest vertex
    cycle: tuple[int, ...] | None = None
    cycle_weight = 0

    def cycles(root: int, u: int, length: int, arcs: list[int]) -> None:
        nonlocal cycle, cycle_weight
        on_path[u] = True
        for v, w, a in succ[u]:
            if v == root:
                total = length + w
                if total < cycle_weight and any(dist[g.tails[b]] != INF for b in arcs + [a]):
                    cycle, cycle_weight = tuple(arcs + [a]), total
            elif v > root and not on_path[v]:
                arcs.append(a)
                cycles(root, v, length + w, arcs)
                arcs.pop()
        on_path[u] = False

    for root in range(n):
        cycles(root, root, 0, [])

    if cycle is not None:
        return NegativeCycle(cycle, cycle_weight)
    return Distances(Certificate(dist))


def relaxed_labels(g: Graph, s: int, rounds: int | None = None) -> list:
    """Labels after ``rounds`` full relaxation passes (default ``n - 1``), no cycle check.

    On graphs with a reachable negative cycle this yields the finite but wrong
    labels a naive prover would emit.
    """
    g.check_vertex(s)
    n = g.n
    if rounds is None:
        rounds = n - 1
    offsets, heads, weights = g.offsets, g.adj_heads, g.adj_weights
    dist: list = [INF] * n
    dist[s] = 0
    for _ in range(rounds):
        for u in range(n):
            du = dist[u]
            if du == INF:
                continue
            for k in range(offsets[u], offsets[u + 1]):
                nd = du + weights[k]
                if nd < dist[heads[k]]:
                    dist[heads[k]] = nd
    return dist

"""Immutable directed multigraph with integer arc weights.

Arcs keep their input order as dense ids ``0..m-1``.  Out-adjacency is stored
in compressed form: the arcs leaving ``u`` occupy positions
``offsets[u]:offsets[u + 1]`` of ``adj_arcs`` / ``adj_heads`` / ``adj_weights``,
in increasing arc-id order.
"""

from __future__ import annotations

from collections.abc import Iterable

from .errors import VertexOutOfRange, WeightOutOfRange

MAX_WEIGHT = 2**31

Arc = tuple[int, int, int]


class Graph:
    __slots__ = (
        "n",
        "arcs",
        "tails",
        "heads",
        "weights",
        "offsets",
        "adj_arcs",
        "adj_heads",
        "adj_weights",
    )

    def __init__(self, n: int, arcs: Iterable[Arc] = ()):
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise ValueError(f"vertex count must be a non-negative int, got {n!r}")
        arcs = tuple((int(u), int(v), int(w)) for u, v, w in arcs)
        for i, (u, v, w) in enumerate(arcs):
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"arc {i} ({u}, {v}) has an endpoint outside [0, {n})", arc=i)
            if abs(w) > MAX_WEIGHT:
                raise WeightOutOfRange(f"arc {i} weight {w} exceeds 2^31 in magnitude", arc=i)

        self.n = n
        self.arcs = arcs
        self.tails = tuple(a[0] for a in arcs)
        self.heads = tuple(a[1] for a in arcs)
        self.weights = tuple(a[2] for a in arcs)

        # counting sort by tail keeps arc-id order within each bucket
        counts = [0] * (n + 1)
        for u in self.tails:
            counts[u + 1] += 1
        for u in range(n):
            counts[u + 1] += counts[u]
        self.offsets = tuple(counts)
        order = [0] * len(arcs)
        fill = counts[:-1]
        for i, u in enumerate(self.tails):
            order[fill[u]] = i
            fill[u] += 1
        self.adj_arcs = tuple(order)
        self.adj_heads = tuple(self.heads[i] for i in order)
        self.adj_weights = tuple(self.weights[i] for i in order)

    @property
    def m(self) -> int:
        return len(self.arcs)

    def __setattr__(self, name, value):
        if hasattr(self, name):
            raise AttributeError(f"Graph is immutable; cannot reassign {name!r}")
        object.__setattr__(self, name, value)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self):
        return hash((self.n, self.arcs))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def out_arcs(self, u: int) -> range:
        """Arc positions in the adjacency arrays for arcs leaving ``u``.

        Use ``adj_arcs[k]`` to map a position back to its arc id.
        """
        self.check_vertex(u)
        return range(self.offsets[u], self.offsets[u + 1])

    def out_arc_ids(self, u: int) -> list[int]:
        return [self.adj_arcs[k] for k in self.out_arcs(u)]

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v!r} outside [0, {self.n})")


def build_graph(n: int, arcs: Iterable[Arc]) -> Graph:
    return Graph(n, arcs)


def reachable_set(g: Graph, s: int) -> set[int]:
    """Vertices reachable from ``s`` along directed arcs, weights ignored."""
    return {v for v, seen in enumerate(reachable_mask(g, s)) if seen}


def reachable_mask(g: Graph, s: int) -> bytearray:
    g.check_vertex(s)
    seen = bytearray(g.n)
    seen[s] = 1
    stack = [s]
    offsets, heads = g.offsets, g.adj_heads
    while stack:
        u = stack.pop()
        for k in range(offsets[u], offsets[u + 1]):
            v = heads[k]
            if not seen[v]:
                seen[v] = 1
                stack.append(v)
    return seen

"""Linear-time verification of claimed single-source shortest-path distances.

A certificate assigns every vertex a label that is either an ``int`` or
:data:`INF`.  :func:`certify` accepts it exactly when the labels are the true
shortest-path distances from the source; :func:`check_constraints_naive`
evaluates the same four constraint families directly and serves as an
independent cross-check.
"""

from __future__ import annotations

import enum
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import Union

from .errors import ArcOutOfRange, CertLengthMismatch, CertOutOfRange
from .graph import Graph, reachable_mask

INF = math.inf
MAX_LABEL = 2**62

#: A finite ``int`` or :data:`INF`.
Dist = Union[int, float]


def _check_label(v: int, label) -> Dist:
    if label is INF or (isinstance(label, float) and label == INF):
        return INF
    if isinstance(label, bool) or not isinstance(label, int):
        raise CertOutOfRange(f"label of vertex {v} must be an int or INF, got {label!r}")
    if abs(label) > MAX_LABEL:
        raise CertOutOfRange(f"label of vertex {v} exceeds 2^62 in magnitude: {label}")
    return label


class Certificate(tuple):
    """Claimed distance labels indexed by vertex id.

    Finite labels are bounded by 2^62 so that adding any arc weight stays
    within 64-bit range.
    """

    __slots__ = ()

    def __new__(cls, labels: Iterable[Dist]):
        if isinstance(labels, Certificate):
            return labels
        return super().__new__(cls, (_check_label(v, x) for v, x in enumerate(labels)))

    def __repr__(self):
        return "Certificate([" + ", ".join("inf" if x == INF else str(x) for x in self) + "])"


class Reason(enum.Enum):
    SOURCE_NOT_ZERO = "SourceNotZero"
    RELAXATION_VIOLATED = "RelaxationViolated"
    FINITE_BUT_NOT_TIGHT_REACHABLE = "FiniteButNotTightReachable"
    UNREACHABLE_NOT_INFINITY = "UnreachableNotInfinity"

    @property
    def witness_kind(self) -> str:
        return "arc" if self is Reason.RELAXATION_VIOLATED else "vertex"


@dataclass(frozen=True)
class VerifyResult:
    accepted: bool
    reason: Reason | None = None
    witness: int | None = None

    def __bool__(self):
        return self.accepted

    @classmethod
    def reject(cls, reason: Reason, witness: int) -> VerifyResult:
        return cls(False, reason, witness)

    def __str__(self):
        if self.accepted:
            return "ACCEPT"
        return f"REJECT {self.reason.value} {self.reason.witness_kind}={self.witness}"


ACCEPT = VerifyResult(True)


@dataclass(frozen=True)
class NegativeCycle:
    """A closed directed walk given by its arc ids, in traversal order."""

    arcs: tuple[int, ...]
    weight: int = field(default=0, compare=False)

    def vertices(self, g: Graph) -> list[int]:
        return [g.tails[a] for a in self.arcs]


def _prepare(g: Graph, s: int, cert: Sequence[Dist]) -> Certificate:
    g.check_vertex(s)
    cert = Certificate(cert)
    if len(cert) != g.n:
        raise CertLengthMismatch(f"certificate has {len(cert)} labels, graph has {g.n} vertices")
    return cert


def certify(g: Graph, s: int, cert: Sequence[Dist], stats: dict | None = None) -> VerifyResult:
    """Check ``cert`` against the graph in O(n + m) time.

    The traversal from ``s`` follows tight arcs only and checks the
    relaxation inequality on every arc it scans.  Arcs are scanned in
    adjacency order with a LIFO stack, so the witness of a rejection is
    deterministic.

    If ``stats`` is a dict it receives ``vertices_popped``, ``arcs_scanned``
    and ``final_checks`` counters.
    """
    D = _prepare(g, s, cert)
    if stats is not None:
        stats.update(vertices_popped=0, arcs_scanned=0, final_checks=0)

    if D[s] != 0:
        return VerifyResult.reject(Reason.SOURCE_NOT_ZERO, s)

    n = g.n
    offsets, heads, weights, arc_ids = g.offsets, g.adj_heads, g.adj_weights, g.adj_arcs
    tight = bytearray(n)
    tight[s] = 1
    stack = [s]
    popped = scanned = 0
    while stack:
        u = stack.pop()
        du = D[u]
        lo, hi = offsets[u], offsets[u + 1]
        popped += 1
        scanned += hi - lo
        for k in range(lo, hi):
            v = heads[k]
            via = du + weights[k]
            dv = D[v]
            if dv > via:
                if stats is not None:
                    stats.update(vertices_popped=popped, arcs_scanned=scanned)
                return VerifyResult.reject(Reason.RELAXATION_VIOLATED, arc_ids[k])
            if dv == via and not tight[v]:
                tight[v] = 1
                stack.append(v)

    if stats is not None:
        stats.update(vertices_popped=popped, arcs_scanned=scanned, final_checks=n)
    for v in range(n):
        if not tight[v] and D[v] != INF:
            if reachable_mask(g, s)[v]:
                return VerifyResult.reject(Reason.FINITE_BUT_NOT_TIGHT_REACHABLE, v)
            return VerifyResult.reject(Reason.UNREACHABLE_NOT_INFINITY, v)
    return ACCEPT


def tight_arcs(g: Graph, cert: Sequence[Dist]) -> list[bool]:
    """Per arc id: the tail label is finite and ``D[head] == D[tail] + weight``."""
    D = Certificate(cert)
    if len(D) != g.n:
        raise CertLengthMismatch(f"certificate has {len(D)} labels, graph has {g.n} vertices")
    return [D[u] != INF and D[v] == D[u] + w for u, v, w in g.arcs]


def check_constraints_naive(g: Graph, s: int, cert: Sequence[Dist]) -> VerifyResult:
    """Evaluate the four constraint families one after another.

    Kept deliberately simple: no shared traversal with :func:`certify`, arcs
    visited in id order, tight-subgraph reachability computed from scratch.
    """
    D = _prepare(g, s, cert)

    if D[s] != 0:
        return VerifyResult.reject(Reason.SOURCE_NOT_ZERO, s)

    for a, (u, v, w) in enumerate(g.arcs):
        if D[u] != INF and D[v] > D[u] + w:
            return VerifyResult.reject(Reason.RELAXATION_VIOLATED, a)

    reachable = reachable_mask(g, s)

    tight = tight_arcs(g, D)
    tight_out: list[list[int]] = [[] for _ in range(g.n)]
    for a, (u, v, _) in enumerate(g.arcs):
        if tight[a]:
            tight_out[u].append(v)
    seen = {s}
    frontier = [s]
    while frontier:
        nxt = []
        for u in frontier:
            for v in tight_out[u]:
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    for v in range(g.n):
        if reachable[v] and v not in seen:
            return VerifyResult.reject(Reason.FINITE_BUT_NOT_TIGHT_REACHABLE, v)

    for v in range(g.n):
        if not reachable[v] and D[v] != INF:
            return VerifyResult.reject(Reason.UNREACHABLE_NOT_INFINITY, v)
    return ACCEPT


def verify_negative_cycle_witness(g: Graph, s: int, cycle: NegativeCycle | Sequence[int]) -> bool:
    """True iff ``cycle`` is a closed walk of negative weight reachable from ``s``."""
    g.check_vertex(s)
    arcs = cycle.arcs if isinstance(cycle, NegativeCycle) else tuple(cycle)
    for a in arcs:
        if isinstance(a, bool) or not isinstance(a, int) or not 0 <= a < g.m:
            raise ArcOutOfRange(f"arc id {a!r} outside [0, {g.m})")
    if not arcs:
        return False
    k = len(arcs)
    for i in range(k):
        if g.heads[arcs[i]] != g.tails[arcs[(i + 1) % k]]:
            return False
    if sum(g.weights[a] for a in arcs) >= 0:
        return False
    return bool(reachable_mask(g, s)[g.tails[arcs[0]]])

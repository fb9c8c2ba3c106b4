"""Certifying single-source shortest paths with arbitrary integer weights."""

from .certify import (
    ACCEPT,
    INF,
    MAX_LABEL,
    Certificate,
    Dist,
    NegativeCycle,
    Reason,
    VerifyResult,
    certify,
    check_constraints_naive,
    tight_arcs,
    verify_negative_cycle_witness,
)
from .errors import SSPError
from .graph import MAX_WEIGHT, Graph, build_graph, reachable_set
from .solvers import Distances, SolveOutcome, bellman_ford, brute_force_solve

__all__ = [
    "ACCEPT",
    "INF",
    "MAX_LABEL",
    "MAX_WEIGHT",
    "Certificate",
    "Dist",
    "Distances",
    "Graph",
    "NegativeCycle",
    "Reason",
    "SSPError",
    "SolveOutcome",
    "VerifyResult",
    "bellman_ford",
    "brute_force_solve",
    "build_graph",
    "certify",
    "check_constraints_naive",
    "reachable_set",
    "tight_arcs",
    "verify_negative_cycle_witness",
]

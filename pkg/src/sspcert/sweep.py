"""Randomized differential sweep behind the ``selftest`` command.

Each instance cross-checks the two solvers, runs the prover-verifier loop,
mutates the true certificate, and compares the fast verifier with the naive
constraint checker on every certificate it sees.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

from .certify import INF, certify, check_constraints_naive, verify_negative_cycle_witness
from .errors import NoTargetAvailable
from .generators import (
    CorruptSource,
    FiniteToInfinity,
    GenParams,
    InfinityToFinite,
    Mode,
    PerturbFinite,
    gen_random_graph,
    inject_negative_cycle,
    mutate_certificate,
)
from .solvers import NegativeCycle, bellman_ford, brute_force_solve, relaxed_labels


@dataclass
class SweepReport:
    counts: Counter = field(default_factory=Counter)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, what: str) -> None:
        self.failures.append(what)

    def summary(self) -> str:
        lines = [f"{k}: {v}" for k, v in sorted(self.counts.items())]
        lines.append(f"failures: {len(self.failures)}")
        lines.extend(f"  {f}" for f in self.failures[:20])
        return "\n".join(lines)


def random_instance(seed: int, max_n: int = 8, max_m: int = 20, wmin: int = -8, wmax: int = 8):
    rng = random.Random(seed)
    n = rng.randint(1, max_n)
    mode = Mode.NO_NEGATIVE_CYCLE if seed % 2 else Mode.UNRESTRICTED
    g = gen_random_graph(GenParams(n, rng.randint(0, max_m), wmin, wmax, mode, seed))
    return g, rng.randrange(n)


def mutations(rng: random.Random):
    """Two draws of every mutation kind."""
    for _ in range(2):
        yield PerturbFinite(rng.choice([-1, 1]) * rng.randint(1, 5))
        yield FiniteToInfinity()
        yield InfinityToFinite(rng.randint(-20, 20))
        yield CorruptSource(rng.choice([-1, 1]) * rng.randint(1, 5))


def _decide(report: SweepReport, g, s, cert, label: str):
    fast = certify(g, s, cert)
    naive = check_constraints_naive(g, s, cert)
    report.counts["decisions"] += 1
    if fast.accepted != naive.accepted:
        report.fail(f"{label}: certify={fast} naive={naive}")
    return fast


def run_sweep(count: int = 1000, seed: int = 0, cycles: int = 200) -> SweepReport:
    report = SweepReport()
    for i in range(count):
        iseed = seed + i
        g, s = random_instance(iseed)
        label = f"instance seed={iseed}"
        report.counts["instances"] += 1
        bf, brute = bellman_ford(g, s), brute_force_solve(g, s)
        if bf != brute and not (isinstance(bf, NegativeCycle) and isinstance(brute, NegativeCycle)):
            report.fail(f"{label}: bellman_ford={bf} brute_force={brute}")
            continue
        if isinstance(bf, NegativeCycle):
            report.counts["negative_cycle_instances"] += 1
            if not verify_negative_cycle_witness(g, s, bf):
                report.fail(f"{label}: bad cycle witness {bf.arcs}")
            continue

        report.counts["solvable"] += 1
        if not _decide(report, g, s, bf.cert, label):
            report.fail(f"{label}: true certificate rejected")
        rng = random.Random(iseed)
        for kind in mutations(rng):
            try:
                bad = mutate_certificate(bf.cert, kind, rng.getrandbits(32), source=s)
            except NoTargetAvailable:
                continue
            report.counts["mutations"] += 1
            if _decide(report, g, s, bad, f"{label} {kind}"):
                report.fail(f"{label}: mutation {kind} survived")
            else:
                report.counts["mutations_killed"] += 1

    for i in range(cycles):
        iseed = seed + count + i
        rng = random.Random(iseed)
        base, _ = random_instance(iseed)
        g = inject_negative_cycle(base, rng.randint(1, base.n), iseed)
        label = f"cycle instance seed={iseed}"
        report.counts["injected_cycles"] += 1
        bf = bellman_ford(g, 0)
        if not isinstance(bf, NegativeCycle) or not verify_negative_cycle_witness(g, 0, bf):
            report.fail(f"{label}: no valid witness from bellman_ford ({bf})")
        if not isinstance(brute_force_solve(g, 0), NegativeCycle):
            report.fail(f"{label}: brute force missed the cycle")
        labels = relaxed_labels(g, 0)
        candidates = [labels, [0 if x == INF else x for x in labels]]
        candidates.append([0] + [rng.randint(-50, 50) for _ in range(g.n - 1)])
        for cand in candidates:
            if _decide(report, g, 0, cand, label):
                report.fail(f"{label}: accepted finite labels {cand}")
            else:
                report.counts["cycle_candidates_rejected"] += 1
    return report

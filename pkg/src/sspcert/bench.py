"""Scaling benchmark: certificate checking versus recomputation."""

from __future__ import annotations

import gc
import statistics
import time
from collections.abc import Iterable
from dataclasses import dataclass, field

from .certify import certify
from .generators import GenParams, Mode, gen_random_graph
from .solvers import Distances, bellman_ford

CSV_COLUMNS = ("n", "m", "certify_ns", "bf_ns", "speedup")


@dataclass(frozen=True)
class BenchRow:
    n: int
    m: int
    certify_ns: int
    bf_ns: int

    @property
    def speedup(self) -> float:
        return self.bf_ns / self.certify_ns


@dataclass
class BenchReport:
    rows: list[BenchRow] = field(default_factory=list)
    repetitions: int = 5
    timer_resolution_ns: float = 0.0

    @property
    def note(self) -> str:
        return (
            f"median of {self.repetitions} repetitions, perf_counter_ns "
            f"(resolution {self.timer_resolution_ns:g} ns), single-threaded"
        )

    def to_csv(self) -> str:
        lines = [",".join(CSV_COLUMNS)]
        for r in self.rows:
            lines.append(f"{r.n},{r.m},{r.certify_ns},{r.bf_ns},{r.speedup:.3f}")
        return "\n".join(lines) + "\n"

    def format_table(self) -> str:
        out = [f"{'n':>8} {'m':>9} {'certify ms':>11} {'bellman-ford ms':>16} {'speedup':>8}"]
        for r in self.rows:
            out.append(
                f"{r.n:>8} {r.m:>9} {r.certify_ns / 1e6:>11.2f} {r.bf_ns / 1e6:>16.2f} {r.speedup:>8.1f}"
            )
        out.append(f"# {self.note}")
        return "\n".join(out)


def _time_ns(fn) -> int:
    t0 = time.perf_counter_ns()
    fn()
    return time.perf_counter_ns() - t0


def run_scaling_bench(
    sizes: Iterable[tuple[int, int]],
    seed: int = 0,
    repetitions: int = 5,
    wmin: int = -1000,
    wmax: int = 1000,
) -> BenchReport:
    """Time certify and bellman_ford on generated negative-weight instances.

    Graphs come from ``no_negative_cycle`` mode so Bellman-Ford always yields
    a certificate; source is vertex 0.  Repetitions are interleaved across
    sizes so a transient slowdown of the machine spreads over all rows
    instead of skewing one of them.
    """
    if repetitions < 5:
        raise ValueError("timings are medians of at least 5 repetitions")
    report = BenchReport(
        repetitions=repetitions,
        timer_resolution_ns=time.get_clock_info("perf_counter").resolution * 1e9,
    )
    cases = []
    for i, (n, m) in enumerate(sizes):
        g = gen_random_graph(GenParams(n, m, wmin, wmax, Mode.NO_NEGATIVE_CYCLE, seed + i))
        outcome = bellman_ford(g, 0)
        if not isinstance(outcome, Distances):
            raise RuntimeError(f"generator produced a negative cycle for n={n}, m={m}")
        if not certify(g, 0, outcome.cert):
            raise RuntimeError(f"certify rejected the Bellman-Ford certificate for n={n}, m={m}")
        cases.append((g, outcome.cert, [], []))

    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(repetitions):
            for g, cert, certify_ns, bf_ns in cases:
                certify_ns.append(_time_ns(lambda: certify(g, 0, cert)))
                bf_ns.append(_time_ns(lambda: bellman_ford(g, 0)))
    finally:
        if gc_was_enabled:
            gc.enable()

    for g, _, certify_ns, bf_ns in cases:
        report.rows.append(
            BenchRow(g.n, g.m, max(1, int(statistics.median(certify_ns))), max(1, int(statistics.median(bf_ns))))
        )
    return report

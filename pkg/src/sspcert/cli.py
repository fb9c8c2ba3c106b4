"""Command-line front end.

Vertices and arcs are printed one-based, matching the file formats (arc ``k``
is the ``k``-th ``a`` line of the ``.gr`` file).

Exit codes: 0 success / accept, 1 reject / negative cycle / failed check,
2 bad input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import CSV_COLUMNS, run_scaling_bench
from .certify import Reason, certify
from .dimacs import GraphDocument, parse_cert, parse_gr, write_cert, write_gr
from .errors import NoTargetAvailable, SSPError
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
from .solvers import NegativeCycle, bellman_ford
from .sweep import run_sweep

EXIT_OK, EXIT_REJECT, EXIT_INPUT = 0, 1, 2


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text(encoding="ascii")


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="ascii")


def _source(doc: GraphDocument, arg: int | None) -> int:
    if arg is not None:
        doc.graph.check_vertex(arg - 1)
        return arg - 1
    return doc.source if doc.source is not None else 0


def cmd_verify(args) -> int:
    doc = parse_gr(_read(args.graph))
    g = doc.graph
    s = _source(doc, args.source)
    cert = parse_cert(_read(args.cert), g.n)
    result = certify(g, s, cert)
    if result.accepted:
        print("ACCEPT")
        return EXIT_OK
    if result.reason is Reason.RELAXATION_VIOLATED:
        a = result.witness
        u, v, w = g.arcs[a]
        where = f"arc={a + 1} ({u + 1}->{v + 1} weight {w})"
    else:
        where = f"vertex={result.witness + 1}"
    print(f"REJECT {result.reason.value} {where}")
    return EXIT_REJECT


def cmd_solve(args) -> int:
    doc = parse_gr(_read(args.graph))
    g = doc.graph
    outcome = bellman_ford(g, _source(doc, args.source))
    if isinstance(outcome, NegativeCycle):
        arcs = " ".join(str(a + 1) for a in outcome.arcs)
        print(f"NEGATIVE_CYCLE weight={outcome.weight} arcs={arcs}")
        return EXIT_REJECT
    text = write_cert(outcome.cert)
    if args.output:
        _emit(text, args.output)
        print(f"SOLVED n={g.n} m={g.m}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_gen(args) -> int:
    params = GenParams(args.n, args.m, args.wmin, args.wmax, Mode(args.mode), args.seed)
    g = gen_random_graph(params)
    if args.negative_cycle:
        g = inject_negative_cycle(g, args.negative_cycle, args.seed)
    source = None
    if args.source is not None:
        g.check_vertex(args.source - 1)
        source = args.source - 1
    _emit(write_gr(GraphDocument(g, source)), args.output)
    return EXIT_OK


_KINDS = {
    "perturb": lambda a: PerturbFinite(a.delta),
    "to-inf": lambda a: FiniteToInfinity(),
    "from-inf": lambda a: InfinityToFinite(a.value),
    "source": lambda a: CorruptSource(a.value),
}


def cmd_mutate(args) -> int:
    cert = parse_cert(_read(args.cert))
    try:
        bad = mutate_certificate(cert, _KINDS[args.kind](args), args.seed, source=args.source - 1)
    except NoTargetAvailable as exc:
        print(f"NO_TARGET {exc}", file=sys.stderr)
        return EXIT_REJECT
    _emit(write_cert(bad), args.output)
    return EXIT_OK


def _size(text: str) -> tuple[int, int]:
    try:
        n, m = text.lower().split("x")
        return int(float(n)), int(float(m))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected NxM, got {text!r}") from None


def cmd_bench(args) -> int:
    report = run_scaling_bench(args.sizes, args.seed, args.reps, args.wmin, args.wmax)
    print(report.format_table())
    if args.csv:
        _emit(report.to_csv(), args.csv)
    return EXIT_OK


def cmd_selftest(args) -> int:
    report = run_sweep(args.count, args.seed, args.cycles)
    print(report.summary())
    print("SELFTEST PASS" if report.ok else "SELFTEST FAIL")
    return EXIT_OK if report.ok else EXIT_REJECT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sspcert", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a distance certificate")
    p.add_argument("-g", "--graph", required=True, help=".gr file ('-' for stdin)")
    p.add_argument("-c", "--cert", required=True, help=".cert file")
    p.add_argument("-s", "--source", type=int, help="one-based source (default: the file's 's' line, else 1)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="run Bellman-Ford and emit a certificate")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-s", "--source", type=int)
    p.add_argument("-o", "--output", help="write the certificate here instead of stdout")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("gen", help="generate a random .gr instance")
    p.add_argument("-n", "--n", type=int, required=True)
    p.add_argument("-m", "--m", type=int, required=True)
    p.add_argument("--wmin", type=int, default=-10)
    p.add_argument("--wmax", type=int, default=10)
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.UNRESTRICTED.value)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--negative-cycle", type=int, metavar="K", help="inject a negative cycle of length K")
    p.add_argument("-s", "--source", type=int, help="write an 's' line for this one-based vertex")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("mutate", help="corrupt one label of a certificate")
    p.add_argument("-c", "--cert", required=True)
    p.add_argument("--kind", choices=sorted(_KINDS), required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--delta", type=int, default=1, help="offset for --kind perturb")
    p.add_argument("--value", type=int, default=1, help="new label for --kind from-inf/source")
    p.add_argument("-s", "--source", type=int, default=1)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser(
        "bench",
        help="time certify against Bellman-Ford",
        description="Machine-readable output (--csv) has one row per size with columns "
        + ",".join(CSV_COLUMNS)
        + "; times are medians in nanoseconds and speedup = bf_ns / certify_ns.",
    )
    p.add_argument(
        "--sizes",
        type=lambda t: [_size(x) for x in t.split(",")],
        default=[(10_000, 100_000), (10_000, 200_000), (10_000, 400_000)],
        help="comma-separated NxM list, e.g. 1e4x1e5,1e4x2e5",
    )
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--wmin", type=int, default=-1000)
    p.add_argument("--wmax", type=int, default=1000)
    p.add_argument("--csv", help="write CSV rows here ('-' for stdout)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("selftest", help="run the randomized oracle-equivalence sweep")
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--cycles", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selftest)
    return parser


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT
    try:
        return args.func(args)
    except (SSPError, OSError, UnicodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run_cli())

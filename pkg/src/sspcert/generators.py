"""Seeded test-instance generators and certificate mutations.

Every function takes its seed explicitly and draws from a private
``random.Random`` (Mersenne Twister) instance, so outputs are a pure function
of the arguments for a given Python version.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass

from .certify import INF, Certificate
from .errors import InvalidParams, NoTargetAvailable
from .graph import MAX_WEIGHT, Graph, reachable_mask


class Mode(enum.Enum):
    UNRESTRICTED = "unrestricted"
    NO_NEGATIVE_CYCLE = "no_negative_cycle"


@dataclass(frozen=True)
class GenParams:
    n: int
    m: int
    wmin: int = -10
    wmax: int = 10
    mode: Mode = Mode.UNRESTRICTED
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        if self.n < 1:
            raise InvalidParams(f"n must be >= 1, got {self.n}")
        if self.m < 0:
            raise InvalidParams(f"m must be >= 0, got {self.m}")
        if self.wmin > self.wmax:
            raise InvalidParams(f"wmin {self.wmin} > wmax {self.wmax}")
        if abs(self.wmin) > MAX_WEIGHT or abs(self.wmax) > MAX_WEIGHT:
            raise InvalidParams("weight bounds must lie within +-2^31")
        if not 0 <= self.seed < 2**64:
            raise InvalidParams(f"seed must be a 64-bit unsigned integer, got {self.seed}")


def gen_random_graph(p: GenParams) -> Graph:
    """Random multigraph with uniformly drawn endpoints.

    In ``no_negative_cycle`` mode each weight is ``c + pot[u] - pot[v]`` with a
    reduced cost ``c`` in ``[0, wmax - wmin]`` and potentials in
    ``[0, (wmax - wmin) // 2]``.  Potentials cancel around any cycle, so every
    cycle weighs its non-negative reduced-cost sum.
    """
    rng = random.Random(p.seed)
    n = p.n
    arcs = []
    if p.mode is Mode.UNRESTRICTED:
        for _ in range(p.m):
            arcs.append((rng.randrange(n), rng.randrange(n), rng.randint(p.wmin, p.wmax)))
    else:
        span = max(0, p.wmax - p.wmin)
        pot = [rng.randint(0, span // 2) for _ in range(n)]
        for _ in range(p.m):
            u, v = rng.randrange(n), rng.randrange(n)
            w = rng.randint(0, span) + pot[u] - pot[v]
            arcs.append((u, v, max(-MAX_WEIGHT, min(MAX_WEIGHT, w))))
    return Graph(n, arcs)


def inject_negative_cycle(g: Graph, k: int, seed: int, wmin: int = -10, wmax: int = 10) -> Graph:
    """Append a negative cycle over ``k`` distinct vertices, reachable from vertex 0.

    The first ``k - 1`` cycle arcs get weights in ``[wmin, wmax]``; the closing
    arc is chosen so the total lands in ``[-(wmax - wmin) - 1, -1]``.  When no
    cycle vertex is already reachable from 0, one extra arc from 0 to the
    first cycle vertex is appended.
    """
    if k < 1 or k > g.n:
        raise InvalidParams(f"cycle length must be in [1, {g.n}], got {k}")
    if wmin > wmax:
        raise InvalidParams(f"wmin {wmin} > wmax {wmax}")
    rng = random.Random(seed)
    verts = rng.sample(range(g.n), k)
    weights = [rng.randint(wmin, wmax) for _ in range(k - 1)]
    total = -rng.randint(1, wmax - wmin + 1)
    weights.append(total - sum(weights))
    if any(abs(w) > MAX_WEIGHT for w in weights):
        raise InvalidParams("weight bounds too wide to close the cycle within +-2^31")
    new = [(verts[i], verts[(i + 1) % k], weights[i]) for i in range(k)]
    seen = reachable_mask(g, 0)
    if not any(seen[v] for v in verts):
        new.append((0, verts[0], rng.randint(wmin, wmax)))
    return Graph(g.n, g.arcs + tuple(new))


@dataclass(frozen=True)
class PerturbFinite:
    delta: int

    def __post_init__(self):
        if self.delta == 0:
            raise InvalidParams("PerturbFinite needs a nonzero delta")


@dataclass(frozen=True)
class FiniteToInfinity:
    pass


@dataclass(frozen=True)
class InfinityToFinite:
    value: int


@dataclass(frozen=True)
class CorruptSource:
    value: int

    def __post_init__(self):
        if self.value == 0:
            raise InvalidParams("CorruptSource needs a nonzero value")


MutationKind = PerturbFinite | FiniteToInfinity | InfinityToFinite | CorruptSource


def mutate_certificate(cert, kind: MutationKind, seed: int, source: int = 0) -> Certificate:
    """Change exactly one label of ``cert``.

    The target is drawn with ``seed`` from the eligible vertices: finite
    non-source labels for :class:`PerturbFinite`, any finite label for
    :class:`FiniteToInfinity`, infinite labels for :class:`InfinityToFinite`,
    and the source itself for :class:`CorruptSource`.  Raises
    :class:`NoTargetAvailable` when nothing is eligible.
    """
    labels = list(Certificate(cert))
    if not 0 <= source < len(labels):
        raise NoTargetAvailable(f"source {source} is not a vertex of a {len(labels)}-label certificate")

    match kind:
        case PerturbFinite():
            eligible = [v for v, x in enumerate(labels) if x != INF and v != source]
        case FiniteToInfinity():
            eligible = [v for v, x in enumerate(labels) if x != INF]
        case InfinityToFinite():
            eligible = [v for v, x in enumerate(labels) if x == INF]
        case CorruptSource():
            eligible = [source]
        case _:
            raise TypeError(f"unknown mutation kind {kind!r}")
    if not eligible:
        raise NoTargetAvailable(f"no vertex eligible for {type(kind).__name__}")

    v = random.Random(seed).choice(eligible)
    match kind:
        case PerturbFinite(delta=d):
            labels[v] += d
        case FiniteToInfinity():
            labels[v] = INF
        case InfinityToFinite(value=x) | CorruptSource(value=x):
            labels[v] = x
    return Certificate(labels)

"""DIMACS-style text formats for graphs (``.gr``) and certificates (``.cert``).

Graph documents::

    c optional comment
    p sp <n> <m>
    s <source>            (optional)
    a <tail> <head> <weight>   (exactly m lines)

Certificate documents::

    p cert <n>
    d <vertex> <value|inf>     (exactly n lines, every vertex once)

Vertices are one-based in files and zero-based in memory.  Writers emit the
canonical form: no comments, single spaces, ``\\n`` line endings.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .certify import INF, MAX_LABEL, Certificate
from .errors import (
    CertOutOfRange,
    CountMismatch,
    DuplicateHeader,
    DuplicateVertex,
    HeaderMismatch,
    MalformedLine,
    MissingVertex,
    VertexOutOfRange,
    WeightOutOfRange,
)
from .graph import MAX_WEIGHT, Graph

_INT = re.compile(r"[+-]?[0-9]+")
# more than enough for any count the Graph constructor can hold
_MAX_COUNT = 2**31 - 1


@dataclass(frozen=True)
class GraphDocument:
    graph: Graph
    source: int | None = None  # zero-based


def _lines(text: str | bytes):
    if isinstance(text, (bytes, bytearray)):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise MalformedLine(f"non-ASCII byte at offset {exc.start}", line=text.count(b"\n", 0, exc.start) + 1) from None
    for lineno, line in enumerate(text.split("\n"), start=1):
        tokens = line.split()
        if tokens and tokens[0] != "c":
            yield lineno, tokens


def _int(tok: str, lineno: int) -> int:
    if not _INT.fullmatch(tok):
        raise MalformedLine(f"expected an integer, got {tok!r}", line=lineno)
    return int(tok)


def _count(tok: str, lineno: int) -> int:
    value = _int(tok, lineno)
    if not 0 <= value <= _MAX_COUNT:
        raise MalformedLine(f"count {value} outside [0, {_MAX_COUNT}]", line=lineno)
    return value


def _vertex(tok: str, n: int, lineno: int) -> int:
    v = _int(tok, lineno)
    if not 1 <= v <= n:
        raise VertexOutOfRange(f"vertex {v} outside [1, {n}]", line=lineno)
    return v - 1


def parse_gr(text: str | bytes) -> GraphDocument:
    n = m = None
    source = None
    arcs: list[tuple[int, int, int]] = []
    last = 0
    for lineno, tok in _lines(text):
        last = lineno
        kind = tok[0]
        if kind == "p":
            if n is not None:
                raise DuplicateHeader("second 'p' line", line=lineno)
            if len(tok) != 4 or tok[1] != "sp":
                raise MalformedLine("expected 'p sp <n> <m>'", line=lineno)
            n, m = _count(tok[2], lineno), _count(tok[3], lineno)
        elif kind == "s":
            if n is None:
                raise MalformedLine("'s' line before 'p sp' header", line=lineno)
            if source is not None:
                raise DuplicateHeader("second 's' line", line=lineno)
            if len(tok) != 2:
                raise MalformedLine("expected 's <vertex>'", line=lineno)
            source = _vertex(tok[1], n, lineno)
        elif kind == "a":
            if n is None:
                raise MalformedLine("arc line before 'p sp' header", line=lineno)
            if len(tok) != 4:
                raise MalformedLine("expected 'a <tail> <head> <weight>'", line=lineno)
            if len(arcs) == m:
                raise CountMismatch(f"more than the declared {m} arcs", line=lineno)
            u, v = _vertex(tok[1], n, lineno), _vertex(tok[2], n, lineno)
            w = _int(tok[3], lineno)
            if abs(w) > MAX_WEIGHT:
                raise WeightOutOfRange(f"weight {w} exceeds 2^31 in magnitude", arc=len(arcs), line=lineno)
            arcs.append((u, v, w))
        else:
            raise MalformedLine(f"unknown line type {kind!r}", line=lineno)
    if n is None:
        raise MalformedLine("missing 'p sp <n> <m>' header", line=last or 1)
    if len(arcs) != m:
        raise CountMismatch(f"header declares {m} arcs, found {len(arcs)}", line=last)
    return GraphDocument(Graph(n, arcs), source)


def write_gr(doc: GraphDocument | Graph) -> str:
    if isinstance(doc, Graph):
        doc = GraphDocument(doc)
    g = doc.graph
    out = [f"p sp {g.n} {g.m}\n"]
    if doc.source is not None:
        out.append(f"s {doc.source + 1}\n")
    out.extend(f"a {u + 1} {v + 1} {w}\n" for u, v, w in g.arcs)
    return "".join(out)


def parse_cert(text: str | bytes, n: int | None = None) -> Certificate:
    """Parse a certificate; ``n`` is the expected vertex count, if known."""
    size = None
    labels: dict[int, object] = {}
    last = 0
    for lineno, tok in _lines(text):
        last = lineno
        kind = tok[0]
        if kind == "p":
            if size is not None:
                raise DuplicateHeader("second 'p' line", line=lineno)
            if len(tok) != 3 or tok[1] != "cert":
                raise MalformedLine("expected 'p cert <n>'", line=lineno)
            size = _count(tok[2], lineno)
            if n is not None and size != n:
                raise HeaderMismatch(f"certificate declares {size} vertices, expected {n}", line=lineno)
        elif kind == "d":
            if size is None:
                raise MalformedLine("'d' line before 'p cert' header", line=lineno)
            if len(tok) != 3:
                raise MalformedLine("expected 'd <vertex> <value>'", line=lineno)
            v = _vertex(tok[1], size, lineno)
            if v in labels:
                raise DuplicateVertex(f"vertex {v + 1} listed twice", line=lineno)
            if tok[2] == "inf":
                labels[v] = INF
            else:
                value = _int(tok[2], lineno)
                if abs(value) > MAX_LABEL:
                    raise CertOutOfRange(f"label {value} exceeds 2^62 in magnitude", line=lineno)
                labels[v] = value
        else:
            raise MalformedLine(f"unknown line type {kind!r}", line=lineno)
    if size is None:
        raise MalformedLine("missing 'p cert <n>' header", line=last or 1)
    if len(labels) != size:
        v = next(v for v in range(size) if v not in labels)
        raise MissingVertex(f"no label for vertex {v + 1}", line=last)
    return Certificate(labels[v] for v in range(size))


def write_cert(cert) -> str:
    cert = Certificate(cert)
    out = [f"p cert {len(cert)}\n"]
    out.extend(f"d {v} {'inf' if x == INF else x}\n" for v, x in enumerate(cert, start=1))
    return "".join(out)

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import G1_ARCS, graphs, labels
from sspcert import INF, Graph
from sspcert.dimacs import GraphDocument, parse_cert, parse_gr, write_cert, write_gr
from sspcert.errors import (
    CertOutOfRange,
    CountMismatch,
    DuplicateHeader,
    DuplicateVertex,
    FormatError,
    HeaderMismatch,
    MalformedLine,
    MissingVertex,
    SSPError,
    VertexOutOfRange,
    WeightOutOfRange,
)


def test_parse_single_arc():
    doc = parse_gr("p sp 2 1\na 1 2 -7\n")
    assert doc == GraphDocument(Graph(2, [(0, 1, -7)]), None)


def test_parse_comment_and_source():
    doc = parse_gr("c x\np sp 1 0\ns 1\n")
    assert doc == GraphDocument(Graph(1, []), 0)


def test_parse_without_trailing_newline_and_crlf():
    assert parse_gr("p sp 2 1\r\na 1 2 +3").graph.arcs == ((0, 1, 3),)


@pytest.mark.parametrize(
    "text, error, line",
    [
        ("p sp 2 2\na 1 2 3\n", CountMismatch, 2),
        ("p sp 2 0\na 1 2 3\n", CountMismatch, 2),
        ("p sp 2 1\np sp 2 1\n", DuplicateHeader, 2),
        ("p sp 2 0\ns 1\ns 2\n", DuplicateHeader, 3),
        ("a 1 2 3\np sp 2 1\n", MalformedLine, 1),
        ("p sp 2 1\na 1 3 3\n", VertexOutOfRange, 2),
        ("p sp 2 1\na 0 1 3\n", VertexOutOfRange, 2),
        ("p sp 2 1\na 1 2 2147483649\n", WeightOutOfRange, 2),
        ("p sp 2 1\na 1 2 x\n", MalformedLine, 2),
        ("p sp 2 1\na 1 2\n", MalformedLine, 2),
        ("p max 2 1\n", MalformedLine, 1),
        ("c only\n", MalformedLine, 1),
        ("p sp 2 1\nq\n", MalformedLine, 2),
        ("p sp -1 0\n", MalformedLine, 1),
        ("p sp 2 0\ns 3\n", VertexOutOfRange, 2),
    ],
)
def test_gr_errors(text, error, line):
    with pytest.raises(error) as exc:
        parse_gr(text)
    assert exc.value.line == line


def test_write_gr():
    assert write_gr(GraphDocument(Graph(2, [(0, 1, -7)]))) == "p sp 2 1\na 1 2 -7\n"
    assert write_gr(Graph(1, [])) == "p sp 1 0\n"
    assert write_gr(GraphDocument(Graph(3, []), 2)) == "p sp 3 0\ns 3\n"


def test_g1_round_trip():
    doc = GraphDocument(Graph(4, G1_ARCS), 0)
    assert parse_gr(write_gr(doc)) == doc


def test_parse_cert():
    assert parse_cert("p cert 2\nd 1 0\nd 2 inf\n") == (0, INF)
    assert parse_cert("c hi\np cert 2\nd 2 -4\nd 1 0", 2) == (0, -4)


@pytest.mark.parametrize(
    "text, n, error",
    [
        ("p cert 2\nd 1 0\nd 1 0\n", None, DuplicateVertex),
        ("p cert 1\nd 1 4611686018427387905\n", None, CertOutOfRange),
        ("p cert 1\nd 1 -4611686018427387905\n", None, CertOutOfRange),
        ("p cert 2\nd 1 0\n", None, MissingVertex),
        ("p cert 2\nd 1 0\nd 2 0\n", 3, HeaderMismatch),
        ("p cert 1\nd 1 Infinity\n", None, MalformedLine),
        ("p cert 1\nd 2 0\n", None, VertexOutOfRange),
        ("d 1 0\n", None, MalformedLine),
        ("p cert 1\np cert 1\n", None, DuplicateHeader),
    ],
)
def test_cert_errors(text, n, error):
    with pytest.raises(error) as exc:
        parse_cert(text, n)
    assert exc.value.line is not None


def test_cert_bound_is_inclusive():
    assert parse_cert("p cert 1\nd 1 4611686018427387904\n") == (2**62,)


def test_write_cert():
    assert write_cert([0, -2]) == "p cert 2\nd 1 0\nd 2 -2\n"
    assert write_cert([INF]) == "p cert 1\nd 1 inf\n"


@given(graphs(max_n=12, max_m=30, wmin=-(2**31), wmax=2**31), st.data())
def test_gr_round_trip(g, data):
    source = data.draw(st.none() | st.integers(0, g.n - 1))
    doc = GraphDocument(g, source)
    text = write_gr(doc)
    assert parse_gr(text) == doc
    assert write_gr(parse_gr(text)) == text


@given(st.data())
def test_cert_round_trip(data):
    n = data.draw(st.integers(0, 12))
    cert = data.draw(labels(n, -(2**62), 2**62))
    text = write_cert(cert)
    assert parse_cert(text, n) == tuple(cert)
    assert write_cert(parse_cert(text)) == text


@given(st.lists(st.sampled_from(["c z", "p sp 3 2", "s 2", "a 1 2 -1", "a 3 3 0", "", "  "]), max_size=8))
def test_write_after_parse_is_idempotent(lines):
    try:
        doc = parse_gr("\n".join(lines))
    except FormatError:
        return
    once = write_gr(doc)
    assert write_gr(parse_gr(once)) == once


_TOKENS = st.sampled_from(["p", "sp", "cert", "a", "d", "s", "c", "inf", "0", "1", "2", "-1", "99999999999999999999", "x", "\n", " ", "\t"])


@given(st.one_of(st.binary(max_size=80), st.text(max_size=80), st.lists(_TOKENS, max_size=30).map(" ".join)))
def test_parsers_never_crash(data):
    for parse in (parse_gr, parse_cert):
        try:
            parse(data)
        except SSPError as exc:
            assert exc.line is None or exc.line >= 1

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from cleangraphs.fixtures import cycle, named_fixtures, random_graph
from cleangraphs.formats import (
    EdgeListError,
    Graph6ByteRangeError,
    Graph6HeaderError,
    Graph6TrailingBytesError,
    Graph6TruncatedError,
    GraphDocument,
    emit_edge_list,
    emit_graph6,
    parse_edge_list,
    parse_graph6,
    read_graph,
)
from cleangraphs.graph_core import build_graph

from conftest import graphs

P3 = build_graph(3, [(0, 1), (1, 2)])


def nx_graph6(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return nx.to_graph6_bytes(G, header=False).strip()


def test_golden_values():
    assert emit_graph6(build_graph(1, [])) == b"@"
    assert emit_graph6(P3) == b"Bg"
    assert nx_graph6(P3) == b"Bg"
    assert emit_graph6(build_graph(0, [])) == b"?"


def test_header():
    assert emit_graph6(P3, header=True) == b">>graph6<<Bg"
    assert parse_graph6(b">>graph6<<Bg\n").graph == P3
    with pytest.raises(Graph6HeaderError):
        parse_graph6(b">>graph7<<Bg")


def test_parse_errors():
    with pytest.raises(Graph6TrailingBytesError) as exc:
        parse_graph6(b"@@")
    assert exc.value.offset == 1
    with pytest.raises(Graph6TruncatedError):
        parse_graph6(b"D")
    with pytest.raises(Graph6ByteRangeError):
        parse_graph6(b"B!")


def test_large_n_encoding():
    g = cycle(100)
    data = emit_graph6(g)
    assert data[:1] == b"~" and data == nx_graph6(g)
    assert parse_graph6(data).graph == g


def test_round_trip_fixtures():
    for name, g in named_fixtures().items():
        assert parse_graph6(emit_graph6(g)).graph == g, name
        assert emit_graph6(g) == nx_graph6(g), name


def test_round_trip_random():
    for seed in range(300):
        n = seed % 40
        g = random_graph(n, (seed % 10) / 10, seed)
        data = emit_graph6(g)
        assert parse_graph6(data).graph == g
        assert data == nx_graph6(g)


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=12))
def test_round_trip_property(g):
    assert parse_graph6(emit_graph6(g)).graph == g
    assert parse_edge_list(emit_edge_list(g)).graph == g


def test_edge_list_examples():
    assert parse_edge_list("n 2\n").graph == build_graph(2, [])
    assert parse_edge_list("0 1\n1 2\n").graph == P3
    assert parse_edge_list("# comment\n0 1  # trailing\n\n1 2\n").graph == P3
    assert emit_edge_list(P3) == "n 3\n0 1\n1 2\n"


@pytest.mark.parametrize(
    "text, line",
    [("0 0\n", 1), ("0 1\nx 2\n", 2), ("0 1 2\n", 1), ("n 2\n0 5\n", 2), ("0 -1\n", 1), ("n\n", 1)],
)
def test_edge_list_errors(text, line):
    with pytest.raises(EdgeListError) as exc:
        parse_edge_list(text)
    assert exc.value.line == line


def test_document_labels():
    GraphDocument(P3, {"a": 0, "b": 1, "c": 2})
    with pytest.raises(ValueError):
        GraphDocument(P3, {"a": 0, "b": 0, "c": 2})


def test_read_graph_dispatch():
    assert read_graph(b"Bg\n", "graph6").graph == P3
    assert read_graph(b"0 1\n1 2\n", "edges").graph == P3
    with pytest.raises(ValueError):
        read_graph(b"", "dot")

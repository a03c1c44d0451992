import pytest
from hypothesis import given
from networkx.readwrite.graph6 import from_graph6_bytes, to_graph6_bytes

from helpers import to_nx
from scmbei import families as F
from scmbei.errors import InvalidInput
from scmbei.graph import Graph
from scmbei.graph6 import format_edge_list, parse_edge_list, parse_graph, parse_graph6, to_graph6
from test_graph import graphs


@given(graphs(max_n=12))
def test_graph6_roundtrip_and_networkx_agreement(g):
    s = to_graph6(g)
    assert parse_graph6(s) == g
    h = to_nx(g)
    h = h.__class__(h)  # plain copy
    relabelled = {v: v - 1 for v in g.vertices}
    import networkx as nx
    assert s == to_graph6_bytes(nx.relabel_nodes(h, relabelled), header=False).decode().strip()
    back = from_graph6_bytes(s.encode())
    assert sorted((u + 1, v + 1) for u, v in back.edges()) == g.sorted_edges()


def test_large_n_header():
    g = F.path(70)
    assert parse_graph6(to_graph6(g)) == g


def test_graph6_errors():
    with pytest.raises(InvalidInput):
        parse_graph6("")
    with pytest.raises(InvalidInput):
        parse_graph6("D?")      # body too short for 5 vertices
    with pytest.raises(InvalidInput):
        parse_graph6("A" + chr(200))


def test_edge_list_parsing():
    g = parse_edge_list("# a triangle\n1 2\n2 3\n3 1\n")
    assert g == F.complete(3)
    g = parse_edge_list("5 7\n7 9\n11\n")
    assert g.labels == (5, 7, 9, 11) and g.n == 4
    assert parse_edge_list(format_edge_list(F.cycle(5))) == F.cycle(5)
    with pytest.raises(InvalidInput):
        parse_edge_list("1 2 3\n")
    with pytest.raises(InvalidInput):
        parse_edge_list("1 1\n")
    with pytest.raises(InvalidInput):
        parse_edge_list("a b\n")


def test_parse_graph_autodetects():
    assert parse_graph("1 2\n2 3\n") == F.path(3)
    assert parse_graph(to_graph6(F.cycle(4)) + "\n") == F.cycle(4)
    assert parse_graph(">>graph6<<" + to_graph6(F.claw())) == F.claw()
    with pytest.raises(InvalidInput):
        parse_graph("   \n")

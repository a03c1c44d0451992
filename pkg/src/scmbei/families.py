"""Constructors for the named graph families, and small-graph corpora."""
from __future__ import annotations

from itertools import combinations
from typing import Iterator, List, Sequence

from .errors import InvalidInput
from .graph import Graph, is_connected


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(1, n + 1), 2))


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidInput("a cycle needs at least 3 vertices")
    return Graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with centre 1."""
    return Graph(leaves + 1, [(1, j) for j in range(2, leaves + 2)])


def claw() -> Graph:
    return star(3)


def complete_bipartite(a: int, b: int) -> Graph:
    """Sides {1..a} and {a+1..a+b}."""
    return Graph(a + b, [(i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((i + offset, j + offset) for i, j in g.edges)
        offset += g.n
    return Graph(offset, edges)


def cone(g: Graph) -> Graph:
    """Cone(n+1, g): a new vertex n+1 joined to every vertex of g."""
    apex = g.n + 1
    return Graph(apex, list(g.edges) + [(v, apex) for v in g.vertices])


def wheel(n: int) -> Graph:
    """W_n = Cone(n+1, C_n)."""
    return cone(cycle(n))


def block_star(clique_sizes: Sequence[int]) -> Graph:
    """Cliques glued at vertex 1; sizes count the shared vertex (each >= 2)."""
    if len(clique_sizes) < 1 or any(k < 2 for k in clique_sizes):
        raise InvalidInput("block star cliques need at least 2 vertices each")
    edges = []
    nxt = 2
    for k in clique_sizes:
        members = [1] + list(range(nxt, nxt + k - 1))
        nxt += k - 1
        edges.extend(combinations(members, 2))
    return Graph(nxt - 1, edges)


def k24_whisker() -> Graph:
    """K_{2,4} on {1,2} x {3,4,5,6} with the pendant edge {6,7}."""
    return Graph(7, [(i, j) for i in (1, 2) for j in (3, 4, 5, 6)] + [(6, 7)])


def whiskered_tree() -> Graph:
    """The six-vertex tree with edges 12, 13, 14, 25, 26."""
    return Graph(6, [(1, 2), (1, 3), (1, 4), (2, 5), (2, 6)])


def claw_cone() -> Graph:
    """Cone(5, K_{1,3}) with the claw centred at 1; its only non-empty cutset is {1, 5}."""
    return cone(claw())


def cone_two_squares() -> Graph:
    """Cone(9, C_4 ⊔ C_4)."""
    return cone(disjoint_union(cycle(4), cycle(4)))


def connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected graph on n <= 7 vertices, one per isomorphism class (graph atlas order)."""
    if not 1 <= n <= 7:
        raise InvalidInput("the atlas covers 1..7 vertices")
    from networkx.generators.atlas import graph_atlas_g

    for h in graph_atlas_g():
        if h.number_of_nodes() == n and (n == 1 or _nx_connected(h)):
            g = Graph(n, [(u + 1, v + 1) for u, v in h.edges()])
            if is_connected(g):
                yield g


def _nx_connected(h) -> bool:
    import networkx as nx
    return nx.is_connected(h)


def connected_corpus(max_n: int, min_n: int = 1) -> List[Graph]:
    out = []
    for n in range(min_n, max_n + 1):
        out.extend(connected_graphs(n))
    return out


def block_graphs(max_n: int, min_n: int = 1) -> List[Graph]:
    from .graph import is_block_graph
    return [g for g in connected_corpus(max_n, min_n) if is_block_graph(g)]


def trees(max_n: int, min_n: int = 1) -> List[Graph]:
    return [g for g in connected_corpus(max_n, min_n) if len(g.edges) == g.n - 1]

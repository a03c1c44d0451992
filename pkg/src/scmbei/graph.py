"""Simple undirected graphs on vertices 1..n and the combinatorics around them:
components after vertex removal, cutsets, connectivity, blocks, family
recognition and splitting at free cut vertices.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .errors import InvalidInput, ResourceLimit

DEFAULT_MAX_CUTSET_N = 24

Edge = Tuple[int, int]


class Graph:
    """Immutable simple graph with vertex set {1..n}.

    ``labels[i-1]`` is the original name of vertex i (kept for reports after
    relabelling); equality ignores labels.
    """

    __slots__ = ("n", "edges", "labels", "_adj")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), labels: Optional[Sequence] = None):
        if not isinstance(n, int) or n < 1:
            raise InvalidInput(f"vertex count must be a positive integer, got {n!r}")
        norm = set()
        for e in edges:
            i, j = e
            if not (1 <= i <= n and 1 <= j <= n):
                raise InvalidInput(f"edge {{{i},{j}}} has a label outside 1..{n}")
            if i == j:
                raise InvalidInput(f"loop at vertex {i}")
            norm.add((i, j) if i < j else (j, i))
        adj: List[Set[int]] = [set() for _ in range(n + 1)]
        for i, j in norm:
            adj[i].add(j)
            adj[j].add(i)
        self.n = n
        self.edges: FrozenSet[Edge] = frozenset(norm)
        self.labels = tuple(labels) if labels is not None else tuple(range(1, n + 1))
        if len(self.labels) != n:
            raise InvalidInput("label map has the wrong length")
        self._adj = tuple(frozenset(a) for a in adj)

    @classmethod
    def from_labelled_edges(cls, edges: Iterable[Sequence], vertices: Iterable = ()) -> "Graph":
        """Build from arbitrary hashable labels; vertices are renumbered 1..n in sorted order."""
        edges = [tuple(e) for e in edges]
        names = set(vertices)
        for e in edges:
            names.update(e)
        try:
            ordered = sorted(names)
        except TypeError:
            ordered = sorted(names, key=repr)
        index = {name: k + 1 for k, name in enumerate(ordered)}
        return cls(len(ordered), [(index[a], index[b]) for a, b in edges], labels=ordered)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, i: int, j: int) -> bool:
        return j in self._adj[i]

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def induced(self, keep: Iterable[int]) -> "Graph":
        """Induced subgraph on ``keep``, renumbered 1..k (original labels carried along)."""
        keep = sorted(set(keep))
        _check_labels(self, keep)
        if not keep:
            raise InvalidInput("induced subgraph on the empty set")
        index = {v: k + 1 for k, v in enumerate(keep)}
        edges = [(index[i], index[j]) for i, j in self.edges if i in index and j in index]
        return Graph(len(keep), edges, labels=[self.labels[v - 1] for v in keep])

    def without_vertex(self, v: int) -> "Graph":
        """Same vertex universe with every edge at v deleted (v becomes isolated)."""
        return Graph(self.n, [e for e in self.edges if v not in e], self.labels)


def _check_labels(g: Graph, vs: Iterable[int]):
    for v in vs:
        if not isinstance(v, int) or not 1 <= v <= g.n:
            raise InvalidInput(f"vertex {v!r} is not in 1..{g.n}")


def as_vertex_set(vs: Iterable[int]) -> Tuple[int, ...]:
    return tuple(sorted(set(vs)))


# ------------------------------------------------------------- components
def _components(g: Graph, alive: Iterable[int]) -> List[List[int]]:
    alive = set(alive)
    seen = set()
    out = []
    for s in sorted(alive):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w in alive and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def connected_components(g: Graph, removed: Iterable[int] = ()) -> List[Tuple[int, ...]]:
    """Components of g minus ``removed``, each sorted, listed by smallest vertex."""
    removed = set(removed)
    _check_labels(g, removed)
    return [tuple(c) for c in _components(g, set(g.vertices) - removed)]


def component_count(g: Graph, removed: Iterable[int] = (), within: Optional[Iterable[int]] = None) -> int:
    universe = set(g.vertices) if within is None else set(within)
    return len(_components(g, universe - set(removed)))


def is_connected(g: Graph) -> bool:
    return len(_components(g, g.vertices)) == 1


def _require_connected(g: Graph, what: str):
    if not is_connected(g):
        raise InvalidInput(f"{what} needs a connected graph")


# ---------------------------------------------------------------- cutsets
def _touching_counts(g: Graph, t: Set[int], universe: Set[int]) -> Dict[int, int]:
    """For each v in t, how many components of universe - t it has neighbours in."""
    comp_of = {}
    for k, comp in enumerate(_components(g, universe - t)):
        for u in comp:
            comp_of[u] = k
    return {v: len({comp_of[w] for w in g.neighbors(v) if w in comp_of}) for v in t}


def is_cutset(g: Graph, t: Iterable[int], within: Optional[Iterable[int]] = None) -> bool:
    """c(T) > c(T minus v) for all v in T, via: every v in T meets at least two components.

    Putting v back merges the components it touches, so c drops exactly when
    v touches two or more of them.  ``within`` restricts the ambient vertex set.
    """
    t = set(t)
    _check_labels(g, t)
    universe = set(g.vertices) if within is None else set(within)
    if not t <= universe:
        raise InvalidInput("cutset candidate leaves the ambient vertex set")
    return all(k >= 2 for k in _touching_counts(g, t, universe).values())


def is_cutset_naive(g: Graph, t: Iterable[int], within: Optional[Iterable[int]] = None) -> bool:
    """The defining inequality, evaluated literally by recounting components."""
    t = set(t)
    _check_labels(g, t)
    universe = set(g.vertices) if within is None else set(within)
    c_t = component_count(g, t, universe)
    return all(c_t > component_count(g, t - {v}, universe) for v in t)


def cutsets_within(g: Graph, universe: Iterable[int], max_n: int = DEFAULT_MAX_CUTSET_N) -> List[Tuple[int, ...]]:
    """All cutsets of the induced graph on ``universe`` (which may be disconnected).

    Branch and bound over vertices in BFS order.  A vertex already placed in T
    can only end up touching components that contain one of its neighbours
    outside T; neighbours joined by a path of vertices already kept outside T
    are certainly in the same final component.  When fewer than two such
    classes remain, no completion of the branch is a cutset.
    """
    universe = set(universe)
    if len(universe) > max_n:
        raise ResourceLimit(f"cutset enumeration refused for {len(universe)} > {max_n} vertices")
    order = [v for comp in _components(g, universe) for v in _bfs_order(g, comp, universe)]
    pos = {v: k for k, v in enumerate(order)}
    state: Dict[int, int] = {}  # v -> 1 (in T) / 0 (kept)
    out: List[Tuple[int, ...]] = []

    def feasible() -> bool:
        parent: Dict[int, int] = {}

        def find(a):
            while parent.get(a, a) != a:
                a = parent[a]
            return a

        for v, s in state.items():
            if s == 0:
                for w in g.neighbors(v):
                    if state.get(w) == 0:
                        ra, rb = find(v), find(w)
                        if ra != rb:
                            parent[ra] = rb
        for v, s in state.items():
            if s != 1:
                continue
            classes = set()
            for w in g.neighbors(v):
                if w not in universe or state.get(w) == 1:
                    continue
                classes.add(find(w) if w in state else ("u", w))
                if len(classes) >= 2:
                    break
            if len(classes) < 2:
                return False
        return True

    def rec(k: int):
        if k == len(order):
            t = {v for v, s in state.items() if s == 1}
            if is_cutset(g, t, universe):
                out.append(tuple(sorted(t)))
            return
        v = order[k]
        for choice in (0, 1):
            state[v] = choice
            if feasible():
                rec(k + 1)
            del state[v]

    rec(0)
    out.sort(key=lambda t: (len(t), t))
    return out


def _bfs_order(g: Graph, comp: Sequence[int], universe: Set[int]) -> List[int]:
    start = min(comp, key=lambda v: (-g.degree(v), v))
    seen = {start}
    queue = [start]
    for u in queue:
        for w in sorted(g.neighbors(u)):
            if w in universe and w not in seen:
                seen.add(w)
                queue.append(w)
    return queue


def enumerate_cutsets(g: Graph, max_n: int = DEFAULT_MAX_CUTSET_N) -> List[Tuple[int, ...]]:
    """C(G) for a connected graph, sorted by size then lexicographically; always contains ()."""
    _require_connected(g, "cutset enumeration")
    return cutsets_within(g, g.vertices, max_n)


# ----------------------------------------------------------- connectivity
def is_complete(g: Graph) -> bool:
    return len(g.edges) == g.n * (g.n - 1) // 2


def _local_connectivity(g: Graph, s: int, t: int) -> int:
    """Maximum number of internally disjoint s-t paths (s, t non-adjacent), by augmenting paths
    in the vertex-split network with unit capacities."""
    # node (v, 0) = in, (v, 1) = out; residual capacities in a dict
    cap: Dict[Tuple, Dict[Tuple, int]] = {}

    def arc(a, b, c):
        cap.setdefault(a, {})[b] = cap.setdefault(a, {}).get(b, 0) + c
        cap.setdefault(b, {}).setdefault(a, 0)

    big = g.n
    for v in g.vertices:
        arc((v, 0), (v, 1), big if v in (s, t) else 1)
    for i, j in g.edges:
        arc((i, 1), (j, 0), big)
        arc((j, 1), (i, 0), big)
    source, sink = (s, 1), (t, 0)
    flow = 0
    while True:
        prev = {source: None}
        queue = [source]
        for a in queue:
            if a == sink:
                break
            for b, c in cap[a].items():
                if c > 0 and b not in prev:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            return flow
        b = sink
        while prev[b] is not None:
            a = prev[b]
            cap[a][b] -= 1
            cap[b][a] += 1
            b = a
        flow += 1


def vertex_connectivity(g: Graph) -> int:
    """kappa(G); complete graphs get n-1 by convention (see ``connectivity_report``)."""
    _require_connected(g, "vertex connectivity")
    if is_complete(g):
        return g.n - 1
    best = g.n - 1
    for s in g.vertices:
        for t in range(s + 1, g.n + 1):
            if not g.has_edge(s, t):
                best = min(best, _local_connectivity(g, s, t))
    return best


def vertex_connectivity_bruteforce(g: Graph) -> int:
    """Smallest vertex set whose removal disconnects g (n-1 for complete graphs)."""
    _require_connected(g, "vertex connectivity")
    if is_complete(g):
        return g.n - 1
    for k in range(1, g.n - 1):
        for sep in combinations(g.vertices, k):
            if component_count(g, sep) > 1:
                return k
    return g.n - 1


def connectivity_report(g: Graph) -> dict:
    complete = is_complete(g)
    return {"kappa": vertex_connectivity(g), "complete_convention": complete}


def blocks_and_cutpoints(g: Graph) -> Tuple[List[Tuple[int, ...]], Set[int]]:
    """Biconnected components (as sorted vertex tuples) and articulation points.

    Iterative Hopcroft-Tarjan: edges are stacked on the way down and a block
    is popped whenever low[child] >= disc[parent].
    """
    _require_connected(g, "block decomposition")
    if g.n == 1:
        return [(1,)], set()
    disc: Dict[int, int] = {}
    low: Dict[int, int] = {}
    blocks: List[Tuple[int, ...]] = []
    cuts: Set[int] = set()
    counter = 0
    root = 1
    disc[root] = low[root] = counter
    stack = [(root, None, iter(sorted(g.neighbors(root))))]
    edge_stack: List[Edge] = []
    root_children = 0
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if w == parent:
                continue
            if w not in disc:
                counter += 1
                disc[w] = low[w] = counter
                edge_stack.append((v, w))
                stack.append((w, v, iter(sorted(g.neighbors(w)))))
                if v == root:
                    root_children += 1
                advanced = True
                break
            if disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent is None:
            continue
        low[parent] = min(low[parent], low[v])
        if low[v] >= disc[parent]:
            if parent != root:
                cuts.add(parent)
            block = set()
            while True:
                a, b = edge_stack.pop()
                block.update((a, b))
                if (a, b) == (parent, v):
                    break
            blocks.append(tuple(sorted(block)))
    if root_children > 1:
        cuts.add(root)
    blocks.sort()
    return blocks, cuts


# ------------------------------------------------------------ recognition
@dataclass(frozen=True)
class FamilyTag:
    kind: str
    params: Tuple = ()

    def __str__(self):
        if not self.params:
            return self.kind
        inner = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"{self.kind}({inner})"

    def get(self, key):
        return dict(self.params)[key]


FAMILY_KINDS = ("Complete", "Cycle", "Wheel", "BlockStar", "BlockGraph", "Cone",
                "OneCutset", "Decomposable", "Other")


def is_clique(g: Graph, vs: Iterable[int]) -> bool:
    vs = list(vs)
    return all(g.has_edge(a, b) for a, b in combinations(vs, 2))


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and all(g.degree(v) == 2 for v in g.vertices)


def is_block_graph(g: Graph) -> bool:
    blocks, _ = blocks_and_cutpoints(g)
    return all(is_clique(g, b) for b in blocks)


def cone_apexes(g: Graph) -> List[Tuple[int, int]]:
    """(apex, number of components of g minus apex) for every vertex adjacent to all others."""
    if g.n < 2:
        return []
    return [(v, component_count(g, [v])) for v in g.vertices if g.degree(v) == g.n - 1]


def wheel_apex(g: Graph) -> Optional[int]:
    """Apex of a wheel W_m = Cone(m+1, C_m), m >= 3, or None."""
    if g.n < 4:
        return None
    for v, _ in cone_apexes(g):
        rest = g.induced([u for u in g.vertices if u != v])
        if is_cycle(rest):
            return v
    return None


def free_cut_vertices(g: Graph) -> List[int]:
    """Vertices v with g = G1 ∪ G2 glued at v and v free (neighbourhood a clique) in both.

    That forces g minus v to have exactly two components, each meeting N(v) in a clique.
    """
    out = []
    for v in g.vertices:
        comps = _components(g, set(g.vertices) - {v})
        if len(comps) != 2:
            continue
        nb = g.neighbors(v)
        if all(is_clique(g, [u for u in c if u in nb]) for c in comps):
            out.append(v)
    return out


def recognize(g: Graph, max_cutset_n: int = DEFAULT_MAX_CUTSET_N) -> List[FamilyTag]:
    """Every family predicate that holds for g, in a fixed order."""
    _require_connected(g, "family recognition")
    tags: List[FamilyTag] = []
    if is_complete(g):
        tags.append(FamilyTag("Complete", (("n", g.n),)))
    if is_cycle(g):
        tags.append(FamilyTag("Cycle", (("n", g.n),)))
    apex = wheel_apex(g)
    if apex is not None:
        tags.append(FamilyTag("Wheel", (("n", g.n - 1), ("apex", apex))))
    blocks, cuts = blocks_and_cutpoints(g)
    if all(is_clique(g, b) for b in blocks):
        if len(cuts) == 1:
            v = next(iter(cuts))
            tags.append(FamilyTag("BlockStar", (("cutpoint", v), ("t", component_count(g, [v])))))
        tags.append(FamilyTag("BlockGraph", (("blocks", len(blocks)), ("cutpoints", len(cuts)))))
    for v, r in cone_apexes(g):
        tags.append(FamilyTag("Cone", (("apex", v), ("r", r))))
    if g.n <= max_cutset_n:
        cs = enumerate_cutsets(g, max_cutset_n)
        if len(cs) == 2:
            t = cs[1]
            tags.append(FamilyTag("OneCutset", (("T", t), ("c", component_count(g, t)))))
    for v in free_cut_vertices(g):
        tags.append(FamilyTag("Decomposable", (("v", v),)))
    if not tags:
        tags.append(FamilyTag("Other"))
    return tags


def decompose(g: Graph) -> List[Graph]:
    """Split repeatedly at free cut vertices; summands carry original labels."""
    _require_connected(g, "decomposition")
    cuts = free_cut_vertices(g)
    if not cuts:
        return [g]
    v = cuts[0]
    out = []
    for comp in _components(g, set(g.vertices) - {v}):
        out.extend(decompose(g.induced(list(comp) + [v])))
    return out


def relative_graphs(g: Graph, v: int, keep_universe: bool = True) -> Tuple[Graph, Graph]:
    """(G_v, G minus v): G_v completes the neighbourhood of v.

    With ``keep_universe`` the second graph keeps labels 1..n and v isolated,
    which is what ideals in the same polynomial ring need; otherwise it is the
    induced subgraph renumbered 1..n-1.
    """
    _check_labels(g, [v])
    nb = sorted(g.neighbors(v))
    gv = Graph(g.n, list(g.edges) + list(combinations(nb, 2)), g.labels)
    if keep_universe:
        minus = g.without_vertex(v)
    else:
        minus = g.induced([u for u in g.vertices if u != v])
    return gv, minus

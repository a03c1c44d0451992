"""Shared helpers for the tests (independent oracles live here)."""
from itertools import combinations, product

import networkx as nx

from scmbei.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def brute_cutsets(g: Graph, universe=None):
    """Literal definition: c(T) > c(T minus v) for all v in T, over all subsets."""
    universe = sorted(universe if universe is not None else g.vertices)
    h = to_nx(g).subgraph(universe)

    def c(t):
        return nx.number_connected_components(h.subgraph([u for u in universe if u not in t]))

    out = []
    for k in range(len(universe) + 1):
        for t in combinations(universe, k):
            ct = c(set(t))
            if all(ct > c(set(t) - {v}) for v in t):
                out.append(t)
    return out


def count_standard_monomials(leads_exps, nvars, degree):
    """Number of monomials of a given degree outside the monomial ideal (brute force)."""
    total = 0
    for e in _compositions(degree, nvars):
        if not any(all(a <= b for a, b in zip(g, e)) for g in leads_exps):
            total += 1
    return total


def _compositions(d, k):
    if k == 1:
        yield (d,)
        return
    for first in range(d + 1):
        for rest in _compositions(d - first, k - 1):
            yield (first,) + rest


def series_coefficients(numer, nvars, upto):
    """Coefficients of K(t)/(1-t)^N up to t^upto."""
    from math import comb
    out = []
    for d in range(upto + 1):
        out.append(sum(c * comb(d - i + nvars - 1, nvars - 1) for i, c in enumerate(numer) if i <= d))
    return out


def koszul_betti(ideal, max_degree):
    """Graded Betti numbers of S/I from Koszul homology: beta_{i,j} = dim H_i(x; S/I)_j.

    Uses only normal forms modulo the Groebner basis, so it shares no code
    with the Schreyer resolution.
    """
    from scmbei.algebra.resolution import rank

    ring = ideal.ring
    N = ring.nvars
    p = ring.p
    leads = [ring.exps(m) for m in ideal.leads]

    def standard(d):
        return [e for e in _compositions(d, N) if not any(all(a <= b for a, b in zip(g, e)) for g in leads)]

    std = {d: standard(d) for d in range(max_degree + 1)}
    index = {d: {e: k for k, e in enumerate(std[d])} for d in std}

    def times_var(e, v):
        m = list(e)
        m[v] += 1
        nf = ideal.reduce(ring.monomial(m))
        return {ring.exps(t): c for t, c in nf.items()}

    def basis(i, j):
        d = j - i
        if d < 0 or d > max_degree:
            return []
        return [(F, e) for F in combinations(range(N), i) for e in std[d]]

    def differential_rank(i, j):
        # d: K_{i,j} -> K_{i-1,j}
        if i == 0:
            return 0
        tgt = {b: k for k, b in enumerate(basis(i - 1, j))}
        rows = []
        for F, e in basis(i, j):
            row = {}
            for pos, v in enumerate(F):
                sign = -1 if pos % 2 else 1
                rest = F[:pos] + F[pos + 1:]
                for m, c in times_var(e, v).items():
                    col = tgt[(rest, m)]
                    row[col] = (row.get(col, 0) + sign * c) % p
            rows.append(row)
        return rank(rows, p)

    out = {}
    for j in range(max_degree + 1):
        for i in range(0, min(j, N) + 1):
            dim = len(basis(i, j))
            if not dim:
                continue
            b = dim - differential_rank(i, j) - differential_rank(i + 1, j)
            if b:
                out[(i, j)] = b
    return out

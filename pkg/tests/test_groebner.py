import pytest
import sympy
from hypothesis import given, strategies as st

from scmbei import families as F
from scmbei.algebra.binomial import build_J, graph_ring
from scmbei.algebra.groebner import Budget, groebner_basis, is_groebner, normal_form
from scmbei.algebra.ideal import Ideal
from scmbei.algebra.ring import Ring
from scmbei.errors import ResourceLimit
from scmbei.graph import Graph

P = 32003


def sympy_reduced_basis(ring, polys):
    """Reduced basis from sympy (independent implementation), as dicts in ``ring``."""
    syms = sympy.symbols(ring.names)
    exprs = []
    for f in polys:
        expr = 0
        for m, c in f.items():
            term = int(c)
            for s, e in zip(syms, ring.exps(m)):
                term *= s ** e
            expr += term
        exprs.append(expr)
    order = "grevlex" if ring.order == "degrevlex" else "lex"
    gb = sympy.groebner(exprs, *syms, order=order, modulus=ring.p)
    out = []
    for g in gb.exprs:
        poly = sympy.Poly(g, *syms, modulus=ring.p)
        out.append(ring.monic(ring.from_terms({e: int(c) % ring.p for e, c in poly.terms()})))
    return sorted(out, key=lambda f: max(f), reverse=True)


@pytest.mark.parametrize("g", [F.cycle(4), F.claw(), F.whiskered_tree(), F.complete(4),
                               F.wheel(4), F.claw_cone()], ids=str)
@pytest.mark.parametrize("order", ["degrevlex", "lex"])
def test_reduced_basis_matches_sympy(g, order):
    ring = graph_ring(g, P, order)
    J = build_J(g, ring)
    assert J.gb == sympy_reduced_basis(ring, J.gens)


def test_principal_ideal_and_single_edge():
    ring = graph_ring(Graph(2, [(1, 2)]))
    J = build_J(Graph(2, [(1, 2)]), ring)
    assert J.gb == J.gens and len(J.gb) == 1


def test_c4_basis_strictly_contains_edge_binomials():
    g = F.cycle(4)
    J = build_J(g, graph_ring(g))
    assert len(J.gb) > 4
    gb_set = [tuple(sorted(f.items())) for f in J.gb]
    for f in J.gens:
        assert tuple(sorted(f.items())) in gb_set
        assert not normal_form(J.ring, f, J.gb)


def test_idempotent():
    g = F.cycle(5)
    ring = graph_ring(g)
    J = build_J(g, ring)
    assert groebner_basis(ring, J.gb) == J.gb


def random_binomial_ideal(draw, nvars=4):
    ring = Ring(nvars, 101)
    gens = []
    for _ in range(draw(st.integers(1, 4))):
        a = tuple(draw(st.lists(st.integers(0, 2), min_size=nvars, max_size=nvars)))
        b = tuple(draw(st.lists(st.integers(0, 2), min_size=nvars, max_size=nvars)))
        if sum(a) != sum(b) or a == b or sum(a) == 0:
            continue
        gens.append(ring.from_terms({a: 1, b: draw(st.integers(1, 100))}))
    return ring, gens


@st.composite
def binomial_ideals(draw):
    return random_binomial_ideal(draw)


@given(binomial_ideals())
def test_buchberger_fixpoint_and_generators_reduce_to_zero(data):
    ring, gens = data
    gb = groebner_basis(ring, gens)
    assert is_groebner(ring, gb)
    for f in gens:
        assert not normal_form(ring, f, gb)


@given(binomial_ideals())
def test_matches_sympy_on_random_binomials(data):
    ring, gens = data
    if not gens:
        return
    assert groebner_basis(ring, gens) == sympy_reduced_basis(ring, gens)


def test_basis_budget_raises():
    g = F.complete(5)
    ring = graph_ring(g)
    with pytest.raises(ResourceLimit):
        Ideal(ring, build_J(g, ring).gens, Budget(max_basis=3)).gb


def test_rational_coefficient_budget():
    ring = Ring(3, 0)
    f = ring.from_terms({(2, 0, 0): 1, (0, 1, 1): 3})
    g = ring.from_terms({(1, 1, 0): 1, (0, 0, 2): 7})
    gb = groebner_basis(ring, [f, g])
    assert is_groebner(ring, gb)
    with pytest.raises(ResourceLimit):
        groebner_basis(ring, [f, g], Budget(max_coeff_bits=2))

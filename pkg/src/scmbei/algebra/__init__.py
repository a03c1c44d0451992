"""Exact commutative algebra for binomial edge ideals: rings, Groebner bases,
intersections, dimension, free resolutions and depth."""
from .binomial import GraphIdeal, build_J, build_P, graph_ring, materialize_filtration
from .groebner import Budget, groebner_basis, is_groebner, normal_form
from .ideal import Ideal, hilbert_numerator, ideal_sum, intersect, krull_dim
from .resolution import INFINITE_DEPTH, BettiResolution, ResolutionBudget, depth, resolution
from .ring import Ring


def groebner(ideal: Ideal) -> Ideal:
    """Fill the reduced-basis cache of ``ideal`` and return it."""
    ideal.gb
    return ideal


__all__ = ["BettiResolution", "Budget", "GraphIdeal", "INFINITE_DEPTH", "Ideal", "ResolutionBudget",
           "Ring", "build_J", "build_P", "depth", "graph_ring", "groebner", "groebner_basis",
           "hilbert_numerator", "ideal_sum", "intersect", "is_groebner", "krull_dim",
           "materialize_filtration", "normal_form", "resolution"]

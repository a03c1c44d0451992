"""Dimension combinatorics of the minimal primes P_T of a binomial edge ideal.

Each cutset T gives a minimal prime of dimension n - |T| + c(T); the
filtration level I^<i> keeps exactly the primes of dimension > i.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .errors import InvalidInput, NotApplicable
from .graph import (DEFAULT_MAX_CUTSET_N, Graph, component_count, enumerate_cutsets, is_complete,
                    vertex_connectivity)


@dataclass(frozen=True)
class CutsetProfile:
    t: Tuple[int, ...]
    c: int
    prime_dim: int

    def to_json(self) -> dict:
        return {"T": list(self.t), "c": self.c, "dim": self.prime_dim}


@dataclass(frozen=True)
class DimensionSpectrum:
    dims: Tuple[int, ...]

    @property
    def krull_dim(self) -> int:
        return self.dims[-1]

    @property
    def min_dim(self) -> int:
        return self.dims[0]

    def to_json(self) -> dict:
        return {"dims": list(self.dims), "krull_dim": self.krull_dim, "m": self.min_dim}


@dataclass(frozen=True)
class FiltrationLevel:
    i: int
    retained: Tuple[CutsetProfile, ...]


def profile(g: Graph, t) -> CutsetProfile:
    t = tuple(sorted(t))
    c = component_count(g, t)
    return CutsetProfile(t, c, g.n - len(t) + c)


def profiles(g: Graph, max_cutset_n: int = DEFAULT_MAX_CUTSET_N) -> List[CutsetProfile]:
    """One profile per cutset, ordered by size then lexicographically."""
    return [profile(g, t) for t in enumerate_cutsets(g, max_cutset_n)]


def spectrum(g: Graph, profs: Optional[List[CutsetProfile]] = None) -> DimensionSpectrum:
    profs = profs if profs is not None else profiles(g)
    return DimensionSpectrum(tuple(sorted({p.prime_dim for p in profs})))


def filtration_level(g: Graph, i: int, profs: Optional[List[CutsetProfile]] = None) -> FiltrationLevel:
    profs = profs if profs is not None else profiles(g)
    d = max(p.prime_dim for p in profs)
    if not -1 <= i <= d:
        raise InvalidInput(f"filtration index {i} outside -1..{d}")
    return FiltrationLevel(i, tuple(p for p in profs if p.prime_dim > i))


def min_dim_witness(g: Graph, profs: Optional[List[CutsetProfile]] = None) -> CutsetProfile:
    """Lexicographically smallest cutset attaining m(G)."""
    profs = profs if profs is not None else profiles(g)
    m = min(p.prime_dim for p in profs)
    return min((p for p in profs if p.prime_dim == m), key=lambda p: p.t)


@dataclass(frozen=True)
class NecessaryCheck:
    passes: bool
    kappa: int
    witness: CutsetProfile
    value: int   # kappa - |T| + c(T)

    def to_json(self) -> dict:
        return {"passes": self.passes, "kappa": self.kappa, "witness": self.witness.to_json(),
                "value": self.value}


def necessary_condition(g: Graph, profs: Optional[List[CutsetProfile]] = None) -> NecessaryCheck:
    """kappa(G) - |T| + c(T) <= 2 at a cutset T attaining m(G); failure rules out SCM."""
    if is_complete(g):
        raise NotApplicable("the connectivity condition needs a non-complete graph")
    kappa = vertex_connectivity(g)
    w = min_dim_witness(g, profs)
    value = kappa - len(w.t) + w.c
    return NecessaryCheck(value <= 2, kappa, w, value)

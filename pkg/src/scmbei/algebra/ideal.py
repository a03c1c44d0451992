"""Ideals with a cached reduced Groebner basis, and operations on them."""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

from ..errors import InvalidInput
from .groebner import DEFAULT_BUDGET, Budget, groebner_basis, normal_form
from .ring import Poly, Ring, canonical


class Ideal:
    """A homogeneous ideal given by generators; the reduced basis is computed once.

    Treat instances as immutable: the basis cache is filled on first use and
    never invalidated.
    """

    def __init__(self, ring: Ring, gens: Iterable[Poly], budget: Budget = DEFAULT_BUDGET):
        self.ring = ring
        self.gens: List[Poly] = canonical(ring, gens)
        self.budget = budget
        self._gb: Optional[List[Poly]] = None
        self._leads: Optional[List[int]] = None

    @classmethod
    def unit(cls, ring: Ring) -> "Ideal":
        ideal = cls(ring, [ring.const(1)])
        ideal._gb = [ring.const(1)]
        return ideal

    @property
    def gb(self) -> List[Poly]:
        if self._gb is None:
            self._gb = groebner_basis(self.ring, self.gens, self.budget)
            self._leads = [max(g) for g in self._gb]
        return self._gb

    @property
    def leads(self) -> List[int]:
        self.gb
        return self._leads

    def is_unit(self) -> bool:
        return any(max(g) == self.ring.one for g in self.gb)

    def is_zero(self) -> bool:
        return not self.gens

    def reduce(self, f: Poly) -> Poly:
        return normal_form(self.ring, f, self.gb, self.leads, self.budget)

    def contains(self, f: Poly) -> bool:
        return not self.reduce(f)

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def key(self) -> Tuple:
        """Hashable form of the reduced basis; equal keys mean equal ideals."""
        return tuple(tuple(sorted(g.items())) for g in self.gb)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        _same_ring(self, other)
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __add__(self, other: "Ideal") -> "Ideal":
        return ideal_sum(self, other)

    def __and__(self, other: "Ideal") -> "Ideal":
        return intersect(self, other)

    def initial_exponents(self) -> List[Tuple[int, ...]]:
        return [self.ring.exps(m) for m in self.leads]

    def __repr__(self):
        shown = ", ".join(self.ring.format(g) for g in self.gens[:4])
        more = ", ..." if len(self.gens) > 4 else ""
        return f"Ideal({shown}{more})"


def _same_ring(a: Ideal, b: Ideal):
    if not a.ring.same_as(b.ring):
        raise InvalidInput("ideals live in different rings")


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    _same_ring(a, b)
    return Ideal(a.ring, a.gens + b.gens, a.budget)


def intersect(a: Ideal, b: Ideal) -> Ideal:
    """I ∩ J = (t*I + (1-t)*J) ∩ S, computed by eliminating t."""
    _same_ring(a, b)
    ring = a.ring
    if a.is_unit():
        return Ideal(ring, b.gens, b.budget)
    if b.is_unit():
        return Ideal(ring, a.gens, a.budget)
    if a.is_zero() or b.is_zero():
        return Ideal(ring, [], a.budget)
    if ring.order != "degrevlex":
        base = ring.with_order("degrevlex")
        res = intersect(Ideal(base, [ring.convert(f, base) for f in a.gens]),
                        Ideal(base, [ring.convert(f, base) for f in b.gens]))
        return Ideal(ring, [base.convert(f, ring) for f in res.gb], a.budget)
    elim = ring.elimination_ring()
    t = elim.var(ring.nvars)
    one_minus_t = elim.sub(elim.const(1), t)
    gens = [elim.mul(t, f) for f in a.gb] + [elim.mul(one_minus_t, g) for g in b.gb]
    gb = groebner_basis(elim, gens, a.budget)
    sht = elim._sht
    kept = [g for g in gb if (max(g) >> sht) == 0]
    out = Ideal(ring, kept, a.budget)
    out._gb = canonical(ring, kept)  # elimination of a reduced basis is reduced
    out._leads = [max(g) for g in out._gb]
    return out


def intersect_all(ideals: Sequence[Ideal]) -> Ideal:
    if not ideals:
        raise InvalidInput("empty intersection")
    acc = ideals[0]
    for other in ideals[1:]:
        acc = intersect(acc, other)
    return acc


# ---------------------------------------------------------------- dimension
def _minimal_supports(supports: Iterable[int]) -> List[int]:
    sups = sorted(set(supports), key=lambda s: bin(s).count("1"))
    out: List[int] = []
    for s in sups:
        if not any((t & s) == t for t in out):
            out.append(s)
    return out


def min_hitting_set_size(supports: Sequence[int]) -> int:
    """Smallest number of variables meeting every support (bitmask) -- exact branch and bound."""
    sups = _minimal_supports(supports)
    if not sups:
        return 0
    if 0 in sups:
        raise InvalidInput("empty support: unit ideal")
    best = [min(len(sups), bin(_or_all(sups)).count("1"))]

    def search(remaining: List[int], chosen: int):
        if chosen >= best[0]:
            return
        if not remaining:
            best[0] = chosen
            return
        pivot = min(remaining, key=lambda s: bin(s).count("1"))
        s = pivot
        while s:
            low = s & -s
            s ^= low
            search([r for r in remaining if not (r & low)], chosen + 1)

    search(sups, 0)
    return best[0]


def _or_all(masks):
    out = 0
    for m in masks:
        out |= m
    return out


def krull_dim(ideal: Ideal) -> int:
    """dim S/I from the initial ideal: the largest variable set containing no leading-term support.

    Returns -1 for the unit ideal.
    """
    if ideal.is_unit():
        return -1
    ring = ideal.ring
    return ring.nvars - min_hitting_set_size([ring.support(m) for m in ideal.leads])


# ----------------------------------------------------------- Hilbert series
def hilbert_numerator(ideal: Ideal) -> Tuple[int, ...]:
    """Coefficients of K(t) with HS(S/I) = K(t) / (1-t)^N (independent of N)."""
    if ideal.is_unit():
        return ()
    return _numerator(frozenset(ideal.initial_exponents()))


def _minimalize(gens) -> frozenset:
    gens = sorted(set(gens), key=sum)
    out = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return frozenset(out)


def _poly_add(a, b):
    n = max(len(a), len(b))
    return tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] += u * v
    return tuple(out)


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


@lru_cache(maxsize=200000)
def _numerator(gens: frozenset) -> Tuple[int, ...]:
    gens = _minimalize(gens)
    if not gens:
        return (1,)
    gl = list(gens)
    nv = len(gl[0])
    if not any(sum(g) for g in gl):
        return ()
    counts = [0] * nv
    for g in gl:
        for i, e in enumerate(g):
            if e:
                counts[i] += 1
    if max(counts) <= 1:  # pairwise coprime
        out = (1,)
        for g in gl:
            d = sum(g)
            out = _poly_mul(out, (1,) + (0,) * (d - 1) + (-1,))
        return _trim(out)
    # Pivot on the most frequent variable that is not already a linear generator.
    linear = {i for g in gl if sum(g) == 1 for i, e in enumerate(g) if e}
    var = max((i for i in range(nv) if counts[i] > 1 and i not in linear), key=lambda i: counts[i],
              default=None)
    if var is None:
        var = max(range(nv), key=lambda i: counts[i])
    unit = tuple(1 if i == var else 0 for i in range(nv))
    with_var = _minimalize(list(gl) + [unit])
    colon = _minimalize(tuple(e - 1 if (i == var and e) else e for i, e in enumerate(g)) for g in gl)
    a = _numerator(with_var)
    b = _numerator(colon)
    return _trim(_poly_add(a, (0,) + b))

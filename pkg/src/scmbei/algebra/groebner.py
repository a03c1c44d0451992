"""Buchberger's algorithm with the Gebauer-Moeller criteria.

Pairs are processed by the normal selection strategy (smallest lcm first),
which for homogeneous input walks the ideal degree by degree.
"""
from __future__ import annotations

import heapq
from fractions import Fraction
from typing import List, Optional, Sequence

from ..errors import ResourceLimit
from .ring import Poly, Ring, canonical


class Budget:
    """Limits for a Groebner computation; ``None`` disables a limit."""

    def __init__(self, max_basis: Optional[int] = 5000, max_coeff_bits: Optional[int] = 4096):
        self.max_basis = max_basis
        self.max_coeff_bits = max_coeff_bits


DEFAULT_BUDGET = Budget()


def _check_coeff(c, budget: Budget):
    if budget.max_coeff_bits is None or not isinstance(c, Fraction):
        return
    if max(c.numerator.bit_length(), c.denominator.bit_length()) > budget.max_coeff_bits:
        raise ResourceLimit("rational coefficient size exceeded the budget")


def _admit(ring: Ring, state, h: Poly, budget: Budget):
    """Add a new basis element after checking the size budgets."""
    h = ring.monic(h)
    if not ring.p:
        for c in h.values():
            _check_coeff(c, budget)
    state.add(h)
    if budget.max_basis is not None and len(state.polys) > budget.max_basis:
        raise ResourceLimit("Groebner basis size exceeded the budget")


def top_reduce(ring: Ring, f: Poly, basis: Sequence[Poly], leads: Sequence[int],
               budget: Budget = DEFAULT_BUDGET) -> Poly:
    """Reduce f until its leading term is not divisible by any lead; basis must be monic."""
    return _reduce(ring, f, basis, leads, False, budget)


def normal_form(ring: Ring, f: Poly, basis: Sequence[Poly], leads: Optional[Sequence[int]] = None,
                budget: Budget = DEFAULT_BUDGET) -> Poly:
    """Fully reduced remainder of f modulo a monic basis."""
    if leads is None:
        leads = [max(g) for g in basis]
    return _reduce(ring, f, basis, leads, True, budget)


def _reduce(ring, f, basis, leads, full, budget):
    p = ring.p
    divides = ring.divides
    f = dict(f)
    rem = {}
    pairs = list(zip(leads, basis))
    rational = not p
    while f:
        m = max(f)
        for lg, g in pairs:
            if divides(lg, m):
                break
        else:
            if not full:
                rem.update(f)
                return rem
            rem[m] = f.pop(m)
            continue
        c = f[m]
        shift = m - lg
        get = f.get
        if p:
            for t, gc in g.items():
                k = t + shift
                s = (get(k, 0) - c * gc) % p
                if s:
                    f[k] = s
                else:
                    del f[k]
        else:
            for t, gc in g.items():
                k = t + shift
                s = get(k, 0) - c * gc
                if s:
                    f[k] = s
                    if rational:
                        _check_coeff(s, budget)
                else:
                    del f[k]
    return rem


def s_polynomial(ring: Ring, f: Poly, g: Poly) -> Poly:
    """S-polynomial of two monic polynomials."""
    lf, lg = max(f), max(g)
    lcm = ring.mono_lcm(lf, lg)
    a = ring.mul_term(f, ring.mono_div(lcm, lf))
    b = ring.mul_term(g, ring.mono_div(lcm, lg))
    return ring.sub(a, b)


class _Basis:
    """Working state of one Buchberger run."""

    def __init__(self, ring: Ring):
        self.ring = ring
        self.polys: List[Poly] = []
        self.leads: List[int] = []
        self.exps: List[tuple] = []
        self.supp: List[int] = []
        self.active: List[int] = []
        self.pairs: List[tuple] = []  # (degree, lcm, i, j)

    def lcm(self, i, j):
        return self.ring.encode([max(u, v) for u, v in zip(self.exps[i], self.exps[j])])

    def add(self, h: Poly):
        ring = self.ring
        divides = ring.divides
        k = len(self.polys)
        lh = max(h)
        self.polys.append(h)
        self.leads.append(lh)
        eh = ring.exps(lh)
        self.exps.append(eh)
        sh = 0
        for idx, e in enumerate(eh):
            if e:
                sh |= 1 << idx
        self.supp.append(sh)

        # Gebauer-Moeller update.
        cand = []
        for i in self.active:
            cand.append((self.lcm(i, k), i, (self.supp[i] & sh) == 0))
        keep = []
        for idx, (l1, i, cop) in enumerate(cand):
            if cop:
                keep.append((l1, i, cop))
                continue
            redundant = False
            for jdx, (l2, j, _) in enumerate(cand):
                if jdx != idx and divides(l2, l1) and (l2 != l1 or jdx < idx):
                    redundant = True
                    break
            if not redundant:
                keep.append((l1, i, cop))
        new_pairs = [(ring.mono_degree(l1), l1, i, k) for l1, i, cop in keep if not cop]

        old = []
        for pr in self.pairs:
            _, l, i, j = pr
            if divides(lh, l) and self.lcm(i, k) != l and self.lcm(j, k) != l:
                continue
            old.append(pr)
        old.extend(new_pairs)
        heapq.heapify(old)
        self.pairs = old
        self.active = [i for i in self.active if not divides(lh, self.leads[i])] + [k]


def groebner_basis(ring: Ring, gens: Sequence[Poly], budget: Budget = DEFAULT_BUDGET) -> List[Poly]:
    """Reduced Groebner basis (monic, sorted by descending leading monomial)."""
    todo = canonical(ring, gens)
    if not todo:
        return []
    if any(max(f) == ring.one for f in todo):
        return [ring.const(1)]
    state = _Basis(ring)
    # Insert generators by increasing leading monomial, inter-reducing as we go.
    for f in sorted(todo, key=lambda f: (ring.degree(f), max(f))):
        active = [state.polys[i] for i in state.active]
        leads = [state.leads[i] for i in state.active]
        h = normal_form(ring, f, active, leads, budget) if active else f
        if h:
            _admit(ring, state, h, budget)
    while state.pairs:
        _, _, i, j = heapq.heappop(state.pairs)
        sp = s_polynomial(ring, state.polys[i], state.polys[j])
        active = [state.polys[a] for a in state.active]
        leads = [state.leads[a] for a in state.active]
        h = top_reduce(ring, sp, active, leads, budget)
        if h:
            if max(h) == ring.one:
                return [ring.const(1)]
            _admit(ring, state, h, budget)
    return interreduce(ring, [state.polys[i] for i in state.active], budget)


def interreduce(ring: Ring, basis: Sequence[Poly], budget: Budget = DEFAULT_BUDGET) -> List[Poly]:
    """Turn a Groebner basis into the reduced one."""
    basis = canonical(ring, basis)
    leads = [max(g) for g in basis]
    minimal = []
    for i, (g, lg) in enumerate(zip(basis, leads)):
        if any(j != i and ring.divides(leads[j], lg) and (leads[j] != lg or j < i)
               for j in range(len(basis))):
            continue
        minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        lg = max(g)
        tail = dict(g)
        del tail[lg]
        r = normal_form(ring, tail, others, None, budget) if others else tail
        r[lg] = g[lg]
        out.append(ring.monic(r))
    return canonical(ring, out)


def is_groebner(ring: Ring, basis: Sequence[Poly]) -> bool:
    """Buchberger criterion: every S-polynomial reduces to zero."""
    basis = [ring.monic(g) for g in basis if g]
    leads = [max(g) for g in basis]
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if normal_form(ring, s_polynomial(ring, basis[i], basis[j]), basis, leads):
                return False
    return True

"""Minimal free resolutions, projective dimension and depth.

The resolution is a Schreyer resolution built from the reduced Groebner
basis: level k+1 consists of the S-pair syzygies of level k (one per minimal
generator of the colon ideals of leading terms), each reduced to zero to
obtain its full vector.  Tensoring with K leaves only the constant entries
of the differentials; the homology of that complex of vector spaces, degree
by degree, is Tor(S/I, K), i.e. the graded Betti numbers of the minimal
resolution.

Before resolving, sparse linear forms ``v_a - c*v_b`` (and single variables)
that are nonzerodivisors on S/I are substituted away.  A homogeneous linear
form is a nonzerodivisor exactly when the Hilbert series drops by the
factor (1 - t), which is tested on initial ideals.  Betti numbers and the
projective dimension are unchanged by such a substitution, and the
remaining resolution lives in fewer variables.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..errors import ResourceLimit
from .ideal import Ideal, hilbert_numerator
from .ring import Ring


@dataclass
class ResolutionBudget:
    max_vars: int = 16          # 2n <= 16 by default
    max_frame: int = 200000     # total number of Schreyer frame elements
    max_attempts_per_step: Optional[int] = None  # regular-form search; None = 3 * live vars


@dataclass
class BettiResolution:
    """Ranks of a minimal graded free resolution of S/I."""

    graded: Dict[Tuple[int, int], int]   # (homological degree, internal degree) -> beta
    nvars: int
    regular_forms: int = 0               # linear forms peeled off before resolving
    frame_size: int = 0
    ranks: List[int] = field(default_factory=list)

    def __post_init__(self):
        if not self.ranks:
            top = max((i for (i, _), b in self.graded.items() if b), default=0)
            self.ranks = [sum(b for (i, _), b in self.graded.items() if i == k)
                          for k in range(top + 1)]

    @property
    def proj_dim(self) -> int:
        return len(self.ranks) - 1

    @property
    def depth(self) -> int:
        """Auslander-Buchsbaum: depth S/I = N - pd S/I."""
        return self.nvars - self.proj_dim

    def table(self) -> str:
        """Betti table in the usual row = degree - homological degree layout."""
        if not self.graded:
            return ""
        rows = sorted({d - i for (i, d) in self.graded})
        width = self.proj_dim + 1
        lines = ["      " + " ".join(f"{i:>5}" for i in range(width))]
        for r in rows:
            vals = [self.graded.get((i, i + r), 0) for i in range(width)]
            lines.append(f"{r:>4}: " + " ".join(f"{v if v else '.':>5}" for v in vals))
        return "\n".join(lines)


INFINITE_DEPTH = float("inf")


# ------------------------------------------------------------ linear algebra
def rank(rows: List[Dict[int, object]], p: int) -> int:
    """Rank of a sparse matrix (rows are dicts col -> value) over F_p or Q."""
    pivots: Dict[int, Dict[int, object]] = {}
    r = 0
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            col = min(row)
            if col in pivots:
                prow = pivots[col]
                factor = row[col]
                for c, v in prow.items():
                    s = row.get(c, 0) - factor * v
                    if p:
                        s %= p
                    if s:
                        row[c] = s
                    else:
                        row.pop(c, None)
                continue
            inv = pow(row[col], -1, p) if p else 1 / row[col]
            if p:
                row = {c: (v * inv) % p for c, v in row.items()}
            else:
                row = {c: v * inv for c, v in row.items()}
            pivots[col] = row
            r += 1
            break
    return r


# ------------------------------------------------------- Schreyer resolution
class _Level:
    """Elements of one homological level: vectors in the previous free module."""

    def __init__(self):
        self.vecs: List[Dict[int, object]] = []
        self.totals: List[int] = []     # total monomial of each basis element
        self.comps: List[int] = []      # index (in previous level) of the lead component
        self.degs: List[int] = []
        self.rho: List[int] = []        # tie-break ranks for the Schreyer order


def schreyer_betti(ideal: Ideal, budget: Optional[ResolutionBudget] = None) -> BettiResolution:
    """Graded Betti numbers of S/I from a Schreyer resolution of its Groebner basis."""
    budget = budget or ResolutionBudget()
    ring = ideal.ring
    p = ring.p
    if ideal.is_unit():
        return BettiResolution({}, ring.nvars)
    if ideal.is_zero():
        return BettiResolution({(0, 0): 1}, ring.nvars)
    one = ring.one
    lex_key = _lex_sort_key(ring)

    # Level 1: the Groebner basis, viewed in F_0 = S (one component, R_0 = 1).
    lvl = _Level()
    gb = sorted(ideal.gb, key=lambda g: lex_key(max(g)), reverse=True)
    for g in gb:
        lvl.vecs.append(dict(g))
        lvl.totals.append(max(g))
        lvl.comps.append(0)
        lvl.degs.append(ring.mono_degree(max(g)))
    lvl.rho = _ranks([(0, -j) for j in range(len(gb))])
    levels = [lvl]
    frame = len(gb)

    while True:
        prev = levels[-1]
        nxt = _next_level(ring, prev, levels[-2] if len(levels) > 1 else None, lex_key)
        if not nxt.vecs:
            break
        frame += len(nxt.vecs)
        if frame > budget.max_frame:
            raise ResourceLimit("Schreyer frame exceeded the budget")
        levels.append(nxt)

    # Constant parts of the differentials, grouped by degree.
    counts: Dict[Tuple[int, int], int] = {(0, 0): 1}
    for k, lv in enumerate(levels, start=1):
        for d in lv.degs:
            counts[(k, d)] = counts.get((k, d), 0) + 1
    ranks: Dict[Tuple[int, int], int] = {}
    for k in range(1, len(levels)):
        src, dst = levels[k], levels[k - 1]
        R = len(dst.vecs)
        by_deg: Dict[int, List[Dict[int, object]]] = {}
        for vec, d in zip(src.vecs, src.degs):
            row = {}
            for key, c in vec.items():
                total, r = divmod(key, R)
                j = _rho_to_index(dst, r)
                if dst.degs[j] == d and total == dst.totals[j]:
                    row[j] = c
            if row:
                by_deg.setdefault(d, []).append(row)
        for d, rows in by_deg.items():
            ranks[(k + 1, d)] = rank(rows, p)
    graded = {}
    for (k, d), c in counts.items():
        b = c - ranks.get((k, d), 0) - ranks.get((k + 1, d), 0)
        if b:
            graded[(k, d)] = b
    return BettiResolution(graded, ring.nvars, frame_size=frame)


def _rho_to_index(level: _Level, r: int) -> int:
    inv = getattr(level, "_rho_inv", None)
    if inv is None:
        inv = {rr: j for j, rr in enumerate(level.rho)}
        level._rho_inv = inv
    return inv[r]


def _ranks(keys) -> List[int]:
    order = sorted(range(len(keys)), key=lambda j: keys[j])
    out = [0] * len(keys)
    for rank_, j in enumerate(order):
        out[j] = rank_
    return out


def _lex_sort_key(ring: Ring):
    def key(m):
        return ring.exps(m)
    return key


def _next_level(ring: Ring, cur: _Level, below: Optional[_Level], lex_key) -> _Level:
    """Build level k+1 from level k (``cur``); vectors of level k live in F_{k-1}."""
    one = ring.one
    p = ring.p
    divides = ring.divides
    n_cur = len(cur.vecs)
    R_prev = len(below.vecs) if below is not None else 1

    groups: Dict[int, List[int]] = {}
    for j, c in enumerate(cur.comps):
        groups.setdefault(c, []).append(j)

    # Reducers of vectors in F_{k-1}, keyed by the tie-break rank of their lead component.
    reducers: Dict[int, List[Tuple[int, int]]] = {}
    for j in range(n_cur):
        lead_key = max(cur.vecs[j])
        total, r = divmod(lead_key, R_prev)
        reducers.setdefault(r, []).append((total, j))

    new_specs = []  # (a, b, lead monomial multiplier of a)
    for c, members in groups.items():
        # members are already sorted by index; index order == Schreyer tie-break order
        for pos, a in enumerate(members):
            Ta = cur.totals[a]
            cands = []
            for b in members[pos + 1:]:
                lcm = ring.mono_lcm(Ta, cur.totals[b])
                cands.append((ring.mono_div(lcm, Ta), b))
            for q, b in _minimal_monomials(ring, cands):
                new_specs.append((a, b, q))

    nxt = _Level()
    if not new_specs:
        return nxt
    R_cur = n_cur
    shift_cur = [0] * n_cur
    for spec_idx, (a, b, qa) in enumerate(new_specs):
        Ta, Tb = cur.totals[a], cur.totals[b]
        lcm = ring.mono_mul(qa, Ta)
        qb = ring.mono_div(lcm, Tb)
        # v = qa*sigma_a - qb*sigma_b in F_{k-1}; record tau = qa*e_a - qb*e_b - sum(quotients).
        v: Dict[int, object] = {}
        _axpy(v, cur.vecs[a], (qa - one) * R_prev, 1, p)
        _axpy(v, cur.vecs[b], (qb - one) * R_prev, -1, p)
        tau: Dict[int, object] = {}
        _add_term(tau, (ring.mono_mul(qa, cur.totals[a])) * R_cur + cur.rho[a], 1, p)
        _add_term(tau, (ring.mono_mul(qb, cur.totals[b])) * R_cur + cur.rho[b], -1, p)
        while v:
            lead_key = max(v)
            total, r = divmod(lead_key, R_prev)
            for rt, j in reducers.get(r, ()):
                if divides(rt, total):
                    break
            else:
                raise AssertionError("syzygy S-pair failed to reduce to zero")
            coef = v[lead_key]
            q = ring.mono_div(total, rt)
            _axpy(v, cur.vecs[j], (q - one) * R_prev, -coef, p)
            _add_term(tau, ring.mono_mul(q, cur.totals[j]) * R_cur + cur.rho[j], -coef, p)
        lead = max(tau)
        t_total, t_r = divmod(lead, R_cur)
        nxt.vecs.append(tau)
        nxt.totals.append(t_total)
        nxt.comps.append(a)
        nxt.degs.append(ring.mono_degree(t_total))
        if t_r != cur.rho[a] or tau[lead] != 1:
            raise AssertionError("unexpected Schreyer leading term")

    # Sort level k+1 by (component, lex-descending lead) so the frame shrinks quickly.
    order = sorted(range(len(nxt.vecs)),
                   key=lambda j: (nxt.comps[j], tuple(-e for e in lex_key(nxt.totals[j]))))
    out = _Level()
    for j in order:
        out.vecs.append(nxt.vecs[j])
        out.totals.append(nxt.totals[j])
        out.comps.append(nxt.comps[j])
        out.degs.append(nxt.degs[j])
    out.rho = _ranks([(cur.rho[c], -j) for j, c in enumerate(out.comps)])
    return out


def _minimal_monomials(ring: Ring, cands):
    """Minimal generators (with one witness each) of a list of (monomial, witness)."""
    cands = sorted(cands, key=lambda t: (ring.mono_degree(t[0]), t[0]))
    out = []
    for q, b in cands:
        if not any(ring.divides(q2, q) for q2, _ in out):
            out.append((q, b))
    return out


def _axpy(v, src, shift, coef, p):
    get = v.get
    if p:
        for k, c in src.items():
            kk = k + shift
            s = (get(kk, 0) + coef * c) % p
            if s:
                v[kk] = s
            else:
                v.pop(kk, None)
    else:
        for k, c in src.items():
            kk = k + shift
            s = get(kk, 0) + coef * c
            if s:
                v[kk] = s
            else:
                v.pop(kk, None)


def _add_term(v, key, coef, p):
    s = v.get(key, 0) + coef
    if p:
        s %= p
    if s:
        v[key] = s
    else:
        v.pop(key, None)


# --------------------------------------------------- regular-form reduction
@dataclass
class Reduction:
    ideal: Ideal
    substitutions: List[Tuple[int, Optional[int], object]]


def peel_regular_forms(ideal: Ideal, seed: int = 0,
                       max_attempts_per_step: Optional[int] = None) -> Reduction:
    """Greedily substitute away sparse linear nonzerodivisors on S/I."""
    ring = ideal.ring
    rng = random.Random(seed)
    live = set()
    for g in ideal.gb:
        live |= {i for i in range(ring.nvars) if (ring.variables_of(g) >> i) & 1}
    current = ideal
    target = hilbert_numerator(ideal)
    subs: List[Tuple[int, Optional[int], object]] = []
    while live:
        lv = sorted(live)
        cands = [(a, b) for a in lv for b in lv if a != b] + [(a, None) for a in lv]
        rng.shuffle(cands)
        limit = max_attempts_per_step or 3 * len(lv)
        accepted = None
        for a, b in cands[:limit]:
            c = rng.randrange(1, ring.p) if ring.p else rng.randrange(1, 50)
            gens = [ring.substitute(g, a, b, c) for g in current.gb]
            trial = Ideal(ring, gens, ideal.budget)
            if trial.is_unit():
                continue
            if hilbert_numerator(trial) == target:
                accepted = (a, b, c, trial)
                break
        if accepted is None:
            break
        a, b, c, current = accepted
        subs.append((a, b, c))
        live = set()
        for g in current.gb:
            live |= {i for i in range(ring.nvars) if (ring.variables_of(g) >> i) & 1}
    return Reduction(current, subs)


def resolution(ideal: Ideal, budget: Optional[ResolutionBudget] = None, seed: int = 0,
               peel: bool = False) -> BettiResolution:
    """Betti numbers of S/I; optionally shrink the ring by regular linear forms first."""
    budget = budget or ResolutionBudget()
    ring = ideal.ring
    if ring.nvars > budget.max_vars:
        raise ResourceLimit(f"{ring.nvars} variables exceed the resolution budget of {budget.max_vars}")
    if ideal.is_unit() or ideal.is_zero() or not peel:
        return schreyer_betti(ideal, budget)
    red = peel_regular_forms(ideal, seed, budget.max_attempts_per_step)
    res = schreyer_betti(red.ideal, budget)
    res.regular_forms = len(red.substitutions)
    return res


def depth(ideal: Ideal, budget: Optional[ResolutionBudget] = None, peel: bool = False, seed: int = 0):
    """depth S/I = N - pd(S/I); the unit ideal has depth +inf."""
    if ideal.is_unit():
        return INFINITE_DEPTH
    return resolution(ideal, budget, seed, peel).depth

"""Deciding the sequentially Cohen-Macaulay property of J_G.

Two independent routes:

* ``classify`` fires structural rules R1..R9 (complete, decomposable, block
  graph, cycle, wheel, one cutset, cone, connectivity obstruction, unknown);
* ``oracle_scm`` materialises J_G^<d-1> for every prime dimension d and
  checks depth S/J_G^<d-1> = d with an exact free resolution.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .algebra.binomial import GraphIdeal, graph_ring
from .algebra.groebner import DEFAULT_BUDGET, Budget
from .algebra.ideal import Ideal
from .algebra.resolution import ResolutionBudget, depth
from .algebra.ring import Ring
from .cutsets import necessary_condition, profiles
from .errors import InvalidInput, NotApplicable, ResourceLimit
from .graph import (DEFAULT_MAX_CUTSET_N, Graph, blocks_and_cutpoints, component_count,
                    connected_components, decompose, enumerate_cutsets, free_cut_vertices,
                    is_block_graph, is_complete, is_connected, is_cycle, relative_graphs, wheel_apex,
                    cone_apexes, is_clique)
from .graph6 import to_graph6

SCM, NOT_SCM, UNKNOWN = "SCM", "NotSCM", "Unknown"
DEFAULT_ORACLE_VARS = 16


@dataclass
class Verdict:
    status: str
    rule: str
    parameters: Dict = field(default_factory=dict)
    transcript: Optional[List[Dict]] = None
    fingerprint: str = ""
    reason: Optional[str] = None
    characteristic: Optional[int] = None
    order: Optional[str] = None

    @property
    def decisive(self) -> bool:
        return self.status in (SCM, NOT_SCM)

    def to_json(self) -> dict:
        out = {"status": self.status, "rule": self.rule, "parameters": self.parameters,
               "graph6": self.fingerprint}
        if self.transcript is not None:
            out["transcript"] = self.transcript
        if self.reason is not None:
            out["reason"] = self.reason
        out["characteristic"] = self.characteristic
        out["order"] = self.order
        return out


def _combine(statuses: List[str]) -> str:
    if any(s == NOT_SCM for s in statuses):
        return NOT_SCM
    if all(s == SCM for s in statuses):
        return SCM
    return UNKNOWN


# ------------------------------------------------------------------ oracle
def oracle_scm(g: Graph, ring: Optional[Ring] = None, max_vars: int = DEFAULT_ORACLE_VARS,
               budget: Budget = DEFAULT_BUDGET) -> Verdict:
    """SCM iff depth S/J_G^<d-1> = d for every prime dimension d of J_G."""
    ring = ring or graph_ring(g)
    fp = to_graph6(g)
    base = dict(fingerprint=fp, characteristic=ring.p, order=ring.order)
    if ring.nvars > max_vars:
        return Verdict(UNKNOWN, "oracle", {"variables": ring.nvars, "budget": max_vars},
                       reason="resource-limit: too many variables for the oracle", **base)
    gi = GraphIdeal(g)
    transcript = []
    try:
        for d in gi.dims():
            filtered = gi.filtered(d - 1, ring, budget)
            dep = depth(filtered, ResolutionBudget(max_vars=max_vars))
            transcript.append({"d": d, "level": d - 1, "depth": dep, "ok": dep == d})
    except ResourceLimit as exc:
        return Verdict(UNKNOWN, "oracle", {"variables": ring.nvars}, transcript=transcript,
                       reason=f"resource-limit: {exc}", **base)
    status = SCM if all(row["ok"] for row in transcript) else NOT_SCM
    return Verdict(status, "oracle", {"variables": ring.nvars}, transcript=transcript, **base)


# ----------------------------------------------------------------- classify
def depth_formula_onecut(g: Graph, max_cutset_n: int = DEFAULT_MAX_CUTSET_N) -> int:
    """depth S/J_G = n - |T| + 2 when the only non-empty cutset is T."""
    cs = enumerate_cutsets(g, max_cutset_n)
    if len(cs) != 2:
        raise NotApplicable(f"graph has {len(cs) - 1} non-empty cutsets, not exactly one")
    return g.n - len(cs[1]) + 2


def _labels(g: Graph) -> List:
    return list(g.labels)


def _rule_complete(g, ctx):
    if is_complete(g):
        return SCM, {"n": g.n}
    return None


def _rule_decomposable(g, ctx):
    cuts = free_cut_vertices(g)
    if not cuts:
        return None
    parts = decompose(g)
    subs = [classify(h, ctx["max_cutset_n"]) for h in parts]
    params = {"split_vertex": g.labels[cuts[0] - 1],
              "summands": [{"graph6": to_graph6(h), "labels": _labels(h), "status": v.status,
                            "rule": v.rule} for h, v in zip(parts, subs)],
              "provenance": "external reduction: SCM(G) iff every summand is SCM"}
    return _combine([v.status for v in subs]), params


def _rule_block_graph(g, ctx):
    if is_block_graph(g):
        blocks, cuts = blocks_and_cutpoints(g)
        return SCM, {"blocks": len(blocks), "cutpoints": sorted(cuts)}
    return None


def _rule_cycle(g, ctx):
    if is_cycle(g):
        return SCM, {"n": g.n}
    return None


def _rule_wheel(g, ctx):
    apex = wheel_apex(g)
    if apex is not None:
        return SCM, {"n": g.n - 1, "apex": apex}
    return None


def _rule_one_cutset(g, ctx):
    cs = ctx["cutsets"]()
    if cs is None or len(cs) != 2:
        return None
    t = cs[1]
    c = component_count(g, t)
    params = {"T": list(t), "t": len(t), "c": c, "depth": g.n - len(t) + 2,
              "reading": "characterisation: SCM iff t = 1 or c = 2 "
                         "(stated sufficiency covers t = 1 and t >= 2 with c = 2)"}
    if len(t) == 1 or c == 2:
        return SCM, params
    nec = necessary_condition(g, ctx["profiles"]())
    params["necessary_condition"] = nec.to_json()
    params["confirmed_by_necessary_condition"] = not nec.passes
    return NOT_SCM, params


def _rule_cone(g, ctx):
    for v, r in cone_apexes(g):
        if r < 2:
            continue
        comps = connected_components(g, [v])
        parts = [g.induced(c) for c in comps]
        subs = [classify(h, ctx["max_cutset_n"]) for h in parts]
        params = {"apex": v, "r": r,
                  "components": [{"graph6": to_graph6(h), "labels": _labels(h), "status": s.status,
                                  "rule": s.rule} for h, s in zip(parts, subs)]}
        return _combine([s.status for s in subs]), params
    return None


def _rule_necessary(g, ctx):
    if is_complete(g):
        return None
    profs = ctx["profiles"]()
    if profs is None:
        return None
    nec = necessary_condition(g, profs)
    if not nec.passes:
        return NOT_SCM, nec.to_json()
    return None


RULES = [("R1-complete", _rule_complete), ("R2-decomposable", _rule_decomposable),
         ("R3-block-graph", _rule_block_graph), ("R4-cycle", _rule_cycle), ("R5-wheel", _rule_wheel),
         ("R6-one-cutset", _rule_one_cutset), ("R7-cone", _rule_cone),
         ("R8-necessary-condition", _rule_necessary)]


def _context(g: Graph, max_cutset_n: int):
    cache = {}

    def cutsets():
        if "cs" not in cache:
            cache["cs"] = enumerate_cutsets(g, max_cutset_n) if g.n <= max_cutset_n else None
        return cache["cs"]

    def profs():
        if "pr" not in cache:
            cache["pr"] = profiles(g, max_cutset_n) if g.n <= max_cutset_n else None
        return cache["pr"]

    return {"cutsets": cutsets, "profiles": profs, "max_cutset_n": max_cutset_n}


def classify(g: Graph, max_cutset_n: int = DEFAULT_MAX_CUTSET_N) -> Verdict:
    """First decisive rule in priority order; Unknown (R9) when none decides."""
    if not is_connected(g):
        raise InvalidInput("classify needs a connected graph; split the input first")
    ctx = _context(g, max_cutset_n)
    fp = to_graph6(g)
    undecided = []
    for name, rule in RULES:
        out = rule(g, ctx)
        if out is None:
            continue
        status, params = out
        if status != UNKNOWN:
            return Verdict(status, name, params, fingerprint=fp)
        undecided.append({"rule": name, "parameters": params})
    params = {"undecided": undecided} if undecided else {}
    reason = "no rule decided"
    if g.n > max_cutset_n:
        reason += f"; cutset rules skipped above {max_cutset_n} vertices"
    return Verdict(UNKNOWN, "R9-unknown", params, fingerprint=fp, reason=reason)


def all_rule_verdicts(g: Graph, max_cutset_n: int = DEFAULT_MAX_CUTSET_N) -> List[Tuple[str, str]]:
    """(rule, status) for every rule that fires decisively; used to check rules never conflict."""
    ctx = _context(g, max_cutset_n)
    out = []
    for name, rule in RULES:
        res = rule(g, ctx)
        if res is not None and res[0] != UNKNOWN:
            out.append((name, res[0]))
    return out


# ------------------------------------------------------- cutpoint identity
@dataclass
class Lemma31Report:
    vertex: int
    rows: List[Dict]
    status: str                      # "holds", "fails", "Unknown"
    first_failure: Optional[int]
    hypotheses: Dict
    reason: Optional[str] = None

    def to_json(self) -> dict:
        out = {"vertex": self.vertex, "status": self.status, "first_failure": self.first_failure,
               "hypotheses": self.hypotheses, "levels": self.rows}
        if self.reason:
            out["reason"] = self.reason
        return out


def lemma31_hypotheses(g: Graph, v: int) -> Dict:
    """Whether g is an indecomposable block graph and g minus v = G1 ⊔ B1 ⊔ ... ⊔ Br, r >= 2."""
    comps = connected_components(g, [v])
    complete = [c for c in comps if is_clique(g, c)]
    # one component may play G1; the remaining r >= 2 must be complete
    r = len(comps) - 1 if len(complete) >= len(comps) - 1 else 0
    block = is_block_graph(g)
    indecomposable = not free_cut_vertices(g)
    return {"block_graph": block, "indecomposable": indecomposable, "components": len(comps),
            "complete_components": len(complete), "r": r,
            "hold": block and indecomposable and r >= 2}


def lemma31_sides(g: Graph, v: int, i: int, ring: Ring, budget: Budget = DEFAULT_BUDGET) -> Tuple[Ideal, Ideal]:
    """(J_v^<i> + (J_vbar + (x_v,y_v))^<i>, (J_v + (x_v,y_v))^<i-1>)."""
    gv, minus = relative_graphs(g, v)
    a = GraphIdeal(gv).filtered(i, ring, budget)
    b = GraphIdeal(minus, frozenset([v])).filtered(i, ring, budget)
    right = GraphIdeal(gv, frozenset([v])).filtered(i - 1, ring, budget)
    return a + b, right


def check_lemma31(g: Graph, v: int, ring: Optional[Ring] = None, levels=None,
                  budget: Budget = DEFAULT_BUDGET) -> Lemma31Report:
    """Test the filtered Mayer-Vietoris identity at cutpoint v for each level i (default 0..dim-1)."""
    if not is_connected(g):
        raise InvalidInput("the identity is checked on connected graphs")
    _, cuts = blocks_and_cutpoints(g)
    if v not in cuts:
        raise InvalidInput(f"vertex {v} is not a cutpoint")
    ring = ring or graph_ring(g)
    if levels is None:
        d = max(GraphIdeal(g).dims())
        levels = range(0, d)
    hyp = lemma31_hypotheses(g, v)
    rows = []
    try:
        for i in levels:
            left, right = lemma31_sides(g, v, i, ring, budget)
            rows.append({"i": i, "equal": left == right})
    except ResourceLimit as exc:
        return Lemma31Report(v, rows, UNKNOWN, None, hyp, reason=f"resource-limit: {exc}")
    fail = next((row["i"] for row in rows if not row["equal"]), None)
    return Lemma31Report(v, rows, "holds" if fail is None else "fails", fail, hyp)

import pytest

from scmbei import families as F
from scmbei.algebra import graph_ring
from scmbei.errors import InvalidInput, NotApplicable
from scmbei.graph import Graph, decompose, free_cut_vertices, blocks_and_cutpoints
from scmbei.scm import (NOT_SCM, SCM, UNKNOWN, all_rule_verdicts, check_lemma31, classify,
                        depth_formula_onecut, lemma31_hypotheses, oracle_scm)
from scmbei.algebra.resolution import depth
from scmbei.algebra.binomial import build_J

CORPUS6 = F.connected_corpus(6)


def transcript(v):
    return [(row["d"], row["depth"]) for row in v.transcript]


# ------------------------------------------------------------------ oracle
@pytest.mark.parametrize("g,status,rows", [
    (F.cycle(4), SCM, [(4, 4), (5, 5)]),
    (F.claw_cone(), NOT_SCM, [(6, 5)]),
    (F.complete_bipartite(2, 3), NOT_SCM, [(4, 4), (6, 5)]),
    (F.k24_whisker(), NOT_SCM, [(6, 6), (8, 7), (9, 9)]),
    (F.complete(4), SCM, [(5, 5)]),
], ids=["C4", "claw-cone", "K23", "K24w", "K4"])
def test_oracle_examples(g, status, rows):
    v = oracle_scm(g)
    assert v.status == status and transcript(v) == rows
    assert v.characteristic == 32003 and v.order == "degrevlex"


def test_oracle_budget_reports_unknown():
    v = oracle_scm(F.cone_two_squares())
    assert v.status == UNKNOWN and v.reason.startswith("resource-limit")


def test_oracle_independent_of_characteristic_and_order():
    for g in (F.cycle(4), F.claw_cone(), F.whiskered_tree()):
        base = transcript(oracle_scm(g))
        for p, order in ((0, "degrevlex"), (2, "degrevlex"), (32003, "lex")):
            assert transcript(oracle_scm(g, graph_ring(g, p, order))) == base


# ---------------------------------------------------------------- classify
@pytest.mark.parametrize("g,status,rule", [
    (F.complete(5), SCM, "R1-complete"),
    (F.path(4), SCM, "R2-decomposable"),
    (F.block_star([3, 3, 2]), SCM, "R3-block-graph"),
    (F.cycle(6), SCM, "R4-cycle"),
    (F.wheel(5), SCM, "R5-wheel"),
    (F.claw_cone(), NOT_SCM, "R6-one-cutset"),
    (F.cone_two_squares(), SCM, "R7-cone"),
    (F.k24_whisker(), UNKNOWN, "R9-unknown"),
], ids=["K5", "P4", "blockstar", "C6", "W5", "claw-cone", "cone", "K24w"])
def test_classify_examples(g, status, rule):
    v = classify(g)
    assert (v.status, v.rule) == (status, rule)


def test_classify_rejects_disconnected():
    with pytest.raises(InvalidInput):
        classify(Graph(4, [(1, 2), (3, 4)]))


def test_decomposable_rule_records_provenance():
    v = classify(F.path(4))
    assert v.parameters["provenance"].startswith("external reduction")
    assert all(s["status"] == SCM for s in v.parameters["summands"])


def test_one_cutset_rule_cross_checks_necessary_condition():
    v = classify(F.claw_cone())
    assert v.parameters["confirmed_by_necessary_condition"] is True
    assert v.parameters["depth"] == 5


def test_classify_sound_against_oracle():
    decided = 0
    for g in CORPUS6:
        v = classify(g)
        if v.decisive:
            decided += 1
            assert v.status == oracle_scm(g).status, v.to_json()
    assert decided > len(CORPUS6) // 2


def test_rules_never_conflict():
    for g in CORPUS6:
        assert len({s for _, s in all_rule_verdicts(g)}) <= 1


def test_decomposable_graphs_split_consistently():
    checked = 0
    for g in CORPUS6:
        if free_cut_vertices(g):
            parts = decompose(g)
            expected = SCM if all(oracle_scm(h).status == SCM for h in parts) else NOT_SCM
            assert oracle_scm(g).status == expected
            checked += 1
    assert checked > 20


def test_necessary_condition_failure_implies_not_scm():
    for g in CORPUS6:
        if any(rule == "R8-necessary-condition" for rule, _ in all_rule_verdicts(g)):
            assert oracle_scm(g).status == NOT_SCM


@pytest.mark.parametrize("sizes", [[2, 2, 2], [3, 2, 2], [3, 3, 2], [2, 2, 2, 2], [4, 2, 2]])
def test_block_star_invariants(sizes):
    g = F.block_star(sizes)
    t = len(sizes)
    v = oracle_scm(g)
    assert v.status == SCM
    assert transcript(v) == [(g.n + 1, g.n + 1), (g.n + t - 1, g.n + t - 1)]
    assert depth(build_J(g, graph_ring(g))) == g.n + 1


# ------------------------------------------------------------ onecut depth
@pytest.mark.parametrize("g,value", [(F.claw_cone(), 5), (F.claw(), 5), (F.path(3), 4)],
                         ids=["claw-cone", "claw", "P3"])
def test_onecut_depth_formula(g, value):
    assert depth_formula_onecut(g) == value
    assert depth(build_J(g, graph_ring(g))) == value


def test_onecut_formula_not_applicable():
    # the 3-side of K_{2,3} is a second non-empty cutset
    with pytest.raises(NotApplicable):
        depth_formula_onecut(F.complete_bipartite(2, 3))
    with pytest.raises(NotApplicable):
        depth_formula_onecut(F.cycle(4))


# ------------------------------------------------------- cutpoint identity
def test_identity_holds_under_hypotheses():
    checked = 0
    for g in F.block_graphs(6, 3):
        _, cuts = blocks_and_cutpoints(g)
        for v in sorted(cuts):
            if lemma31_hypotheses(g, v)["hold"]:
                rep = check_lemma31(g, v)
                assert rep.status == "holds", rep.to_json()
                checked += 1
    assert checked >= 6


def test_identity_can_fail_outside_hypotheses():
    g = Graph(5, [(1, 5), (2, 4), (3, 4), (4, 5)])
    rep = check_lemma31(g, 5)
    assert not rep.hypotheses["hold"]
    assert rep.first_failure == 6


def test_identity_on_k24_whisker():
    rep = check_lemma31(F.k24_whisker(), 6)
    assert rep.status == "fails" and rep.first_failure == 8
    assert all(row["equal"] for row in rep.rows if row["i"] < 8)


def test_identity_path_and_errors():
    assert check_lemma31(F.path(3), 2).status == "holds"
    with pytest.raises(InvalidInput):
        check_lemma31(F.path(3), 1)
    with pytest.raises(InvalidInput):
        check_lemma31(F.cycle(4), 1)

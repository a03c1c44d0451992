"""Structural rules against the algebraic oracle on every small connected graph.

The rule engine decides most graphs from their shape alone (complete, cycle,
wheel, block graph, cone, one cutset, decomposable, connectivity obstruction);
the rest are settled by computing depths of the filtered ideals.
"""
# %%
import collections
import time

from scmbei import families as F
from scmbei.graph import blocks_and_cutpoints
from scmbei.scm import check_lemma31, classify, lemma31_hypotheses, oracle_scm

# %% classify every connected graph on at most 6 vertices
t0 = time.perf_counter()
by_rule = collections.Counter()
disagreements = 0
for g in F.connected_corpus(6):
    v = classify(g)
    by_rule[v.rule] += 1
    if v.decisive and v.status != oracle_scm(g).status:
        disagreements += 1
print(dict(sorted(by_rule.items())))
print("disagreements with the oracle:", disagreements, f"({time.perf_counter() - t0:.1f}s)")

# %% what the oracle says about the graphs no rule decides
statuses = collections.Counter(oracle_scm(g).status for g in F.connected_corpus(6)
                               if not classify(g).decisive)
print("undecided by rules:", dict(statuses))

# %% the gluing identity at cutpoints of block graphs
for g in F.block_graphs(6, 5):
    for v in sorted(blocks_and_cutpoints(g)[1]):
        rep = check_lemma31(g, v)
        hold = lemma31_hypotheses(g, v)["hold"]
        print(g.sorted_edges(), "v =", v, "hypotheses" if hold else "          ", rep.status, rep.first_failure)

# %% outside block graphs the identity can break
rep = check_lemma31(F.k24_whisker(), 6)
print("K_2,4 with a whisker at 6:", rep.status, "first at i =", rep.first_failure)

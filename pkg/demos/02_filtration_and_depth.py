"""The dimension filtration of J_G and the depth test for sequential Cohen-Macaulayness.

J_G^<i> keeps the minimal primes of dimension > i.  S/J_G is sequentially
Cohen-Macaulay exactly when depth S/J_G^<d-1> = d for every prime dimension d.
"""
# %%
from scmbei import families as F
from scmbei.algebra import graph_ring
from scmbei.algebra.binomial import GraphIdeal, build_J, build_P
from scmbei.algebra.resolution import resolution
from scmbei.scm import oracle_scm

# %% the 4-cycle: prime dimensions 4 and 5
g = F.cycle(4)
ring = graph_ring(g)
gi = GraphIdeal(g)
print("prime dimensions", gi.dims())
top = gi.filtered(4, ring)
print("J^<4> is the prime of the empty cutset:", top == build_P(g, (), ring))

# %% Betti table of S/J_{C4}
res = resolution(build_J(g, ring))
print(res.table())
print("projective dimension", res.proj_dim, "depth", res.depth)

# %% the depth test, level by level
for h, name in [(F.cycle(4), "C4"), (F.claw_cone(), "claw cone"), (F.k24_whisker(), "K_2,4 with a whisker")]:
    v = oracle_scm(h)
    rows = ", ".join(f"d={r['d']}: depth {r['depth']}" for r in v.transcript)
    print(f"{name:<22} {v.status:<7} {rows}")

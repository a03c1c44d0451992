"""Cutsets, prime dimensions and the Krull dimension of J_G.

Every cutset T of G gives a minimal prime of J_G of dimension n - |T| + c(T).
This walk-through lists them for a few small graphs and checks the largest
one against a Groebner-basis computation of dim S/J_G.
"""
# %%
from scmbei import families as F
from scmbei.algebra import graph_ring, krull_dim
from scmbei.algebra.binomial import build_J, build_P
from scmbei.cutsets import profiles, spectrum
from scmbei.graph import recognize

# %% a tree with two internal vertices and whiskers
g = F.whiskered_tree()
print("edges", g.sorted_edges())
for p in profiles(g):
    print(f"  T={set(p.t) or '{}'}  c(T)={p.c}  dim={p.prime_dim}")

# %% the largest prime dimension is the Krull dimension of the quotient
ring = graph_ring(g)
print("from cutsets:", spectrum(g).krull_dim, " from a Groebner basis:", krull_dim(build_J(g, ring)))

# %% a 4-cycle: two cutsets besides the empty one, each splitting it in two
c4 = F.cycle(4)
ring = graph_ring(c4)
for p in profiles(c4):
    P = build_P(c4, p.t, ring)
    print(p.t, p.prime_dim, [ring.format(f) for f in P.gens])

# %% smallest prime dimension m(G) for cycles, wheels and a cone over two squares
for name, h in [("C6", F.cycle(6)), ("W6", F.wheel(6)), ("cone over two squares", F.cone_two_squares())]:
    sp = spectrum(h)
    print(f"{name:<22} dims={list(sp.dims)}  m={sp.min_dim}  tags={[str(t) for t in recognize(h)]}")

"""
Connectedness and continuity on finite spaces, two ways each.

Connectedness: no clopen parts besides 0 and S, versus the comparability
graph of the preorder being connected. Continuity: preimages of opens are
open, versus the map preserving the preorder. On finite spaces both pairs
agree; here we check that over every topology on up to 3 points.

    python demos/04_connectedness_and_continuity.py
"""
import itertools

from pointtopo import (
    ContinuousMapCandidate,
    connected_components,
    enumerate_topologies,
    is_connected,
    is_connected_by_order,
    is_continuous,
    is_order_preserving,
    make_shape,
    preorder_from_topology,
    reflexive_transitive_closure,
    topology_from_preorder,
)

s = make_shape(["a", "b", "c", "d"])
t = topology_from_preorder(reflexive_transitive_closure(s, [("a", "b"), ("c", "d")]))
print("two disjoint chains a<=b, c<=d")
print("   components:", [str(c) for c in connected_components(t)])

tops = [t for n in (1, 2, 3) for t in enumerate_topologies(n)]
assert all(is_connected(t) == is_connected_by_order(t) for t in tops)
print(f"\nclopen vs comparability connectedness agree on all {len(tops)} topologies")

maps = agree = 0
for src, dst in itertools.product(tops, repeat=2):
    ps, pd = preorder_from_topology(src), preorder_from_topology(dst)
    for f in itertools.product(range(dst.shape.n), repeat=src.shape.n):
        m = ContinuousMapCandidate(src.shape, dst.shape, f)
        maps += 1
        agree += is_continuous(m, src, dst) == is_order_preserving(m, ps, pd)
print(f"preimage vs order-preserving continuity agree on {agree}/{maps} maps")

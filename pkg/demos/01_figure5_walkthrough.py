"""
Walkthrough: a six-point shape, its order topology, and back again.

We start from six covering relations between the points p1..p6, close them
into a preorder, build the topology, read off minimal open parts, and check
that going topology -> preorder gives the same relation.

    python demos/01_figure5_walkthrough.py
"""
from pointtopo import (
    formats,
    hasse_edges,
    is_connected,
    is_t0,
    is_t1,
    make_shape,
    minimal_basis,
    minimal_open_part,
    preorder_from_topology,
    reflexive_transitive_closure,
    topology_from_preorder,
)

S = make_shape(["p1", "p2", "p3", "p4", "p5", "p6"])

# q <= p pairs: the covering relations of the diagram
covers = [("p4", "p6"), ("p4", "p3"), ("p6", "p5"), ("p3", "p1"), ("p1", "p2"), ("p5", "p2")]
pre = reflexive_transitive_closure(S, covers)
print(f"closed preorder has {len(pre)} related pairs (reflexive ones included)")

T = topology_from_preorder(pre)
print(f"\norder topology: {len(T)} open parts")
for part in T.opens:
    print("   ", part)

print("\nminimal open part of each point:")
for p in S.labels:
    print(f"    U_{p} = {minimal_open_part(T, p)}")

print("\nminimal basis:", ", ".join(str(b) for b in minimal_basis(T).elements))

# the two constructions are mutually inverse
assert preorder_from_topology(T) == pre
print("\ntopology -> preorder reproduces the closed relation")

print(f"\nT0: {is_t0(T)}   T1: {is_t1(T)}   connected: {is_connected(T)}")

print("\ncovering diagram as DOT (pipe into `dot -Tpng`):\n")
print(formats.hasse_to_dot(hasse_edges(pre)))

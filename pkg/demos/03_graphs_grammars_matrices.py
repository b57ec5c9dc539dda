"""
Three ways of inducing an order topology when the points are given.

1. A directed graph: an edge from p to q makes q <= p.
2. A set-grammar derivation: a rule applied to p producing q makes p <= q.
3. The relation matrix of a point-free shape topology: m[i][j] = 1 makes
   b_i <= b_j. Such matrices are partial orders, so the result is always T0.

    python demos/03_graphs_grammars_matrices.py
"""
from pointtopo import (
    DerivationStep,
    DerivationTrace,
    RelationMatrix,
    is_t0,
    is_t1,
    make_shape,
    topology_from_derivation,
    topology_from_graph,
    topology_from_relation_matrix,
)


def show(title, t):
    print(title)
    print("   ", "  ".join(str(o) for o in t.opens))
    print(f"    T0={is_t0(t)} T1={is_t1(t)}\n")


# a small "kit of parts": a base, two walls standing on it, a roof on both walls
shape = make_shape(["base", "wallL", "wallR", "roof"])
edges = [("roof", "wallL"), ("roof", "wallR"), ("wallL", "base"), ("wallR", "base")]
show("graph (roof -> walls -> base):", topology_from_graph(shape, edges))

trace = DerivationTrace([
    DerivationStep(1, "place-walls", "base", ("wallL", "wallR")),
    DerivationStep(2, "cap", "wallL", ("roof",)),
])
show("derivation (base generates walls, left wall generates roof):",
     topology_from_derivation(shape, trace))

m = RelationMatrix(("b1", "b2", "b3"), [[1, 1, 1],
                                        [0, 1, 1],
                                        [0, 0, 1]])
show("relation matrix of a 3-chain:", topology_from_relation_matrix(m))

show("identity matrix (totally disconnected source):",
     topology_from_relation_matrix(RelationMatrix(("b1", "b2", "b3"), [[1, 0, 0], [0, 1, 0], [0, 0, 1]])))

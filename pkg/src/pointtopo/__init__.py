"""Order topology on finite shapes made with points.

Finite topologies and preorders on the same point set are two views of one
object: ``topology_from_preorder`` and ``preorder_from_topology`` convert
between them.
"""
from .analysis import (
    ContinuousMapCandidate,
    HasseDiagram,
    comparability_components,
    connected_components,
    count_topologies,
    enumerate_topologies,
    hasse_edges,
    is_connected,
    is_connected_by_order,
    is_continuous,
    is_discrete,
    is_order_preserving,
    is_t0,
    is_t1,
)
from .builders import (
    DerivationStep,
    DerivationTrace,
    DirectedGraph,
    RelationMatrix,
    topology_from_derivation,
    topology_from_graph,
    topology_from_relation_matrix,
)
from .core import (
    Basis,
    Part,
    Preorder,
    Shape,
    Topology,
    discrete_topology,
    indiscrete_topology,
    make_shape,
    minimal_basis,
    minimal_open_part,
    preorder_from_topology,
    reflexive_transitive_closure,
    topology_from_preorder,
    validate_topology,
)
from .errors import *  # noqa: F401,F403

__version__ = "0.1.0"

"""Order topologies induced from directed graphs, set-grammar derivation
traces and relation matrices of shape topologies.

Direction conventions, all expressed as ``lower <= upper``:

* graph edge ``(p, q)`` (from p to q) gives ``q <= p``;
* a rule applied to ``p`` that generates ``q`` gives ``p <= q``;
* matrix entry ``m[i][j] == 1`` gives ``b_i <= b_j`` (row below column).
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence

from .core import (
    Preorder,
    Shape,
    Topology,
    reflexive_transitive_closure,
    topology_from_preorder,
)
from .errors import (
    BadEntry,
    MalformedStep,
    NonMonotoneStepIndex,
    NonSquare,
    NotAntisymmetric,
    NotReflexive,
    NotTransitive,
    SelfLoopWarning,
)


@dataclass(frozen=True)
class DirectedGraph:
    shape: Shape
    edges: tuple[tuple[str, str], ...]

    def __post_init__(self):
        edges = tuple((str(p), str(q)) for p, q in self.edges)
        for p, q in edges:
            self.shape.index(p)
            self.shape.index(q)
        object.__setattr__(self, "edges", edges)


def graph_preorder(shape: Shape, edges) -> Preorder:
    pairs = []
    for p, q in edges:
        if shape.index(p) == shape.index(q):
            warnings.warn(f"self-loop on {p!r} is implied by reflexivity", SelfLoopWarning, stacklevel=3)
        pairs.append((q, p))
    return reflexive_transitive_closure(shape, pairs)


def topology_from_graph(shape: Shape, edges) -> Topology:
    """Edge ``(p, q)`` makes ``q <= p``; the closure then feeds the order topology."""
    return topology_from_preorder(graph_preorder(shape, edges))


@dataclass(frozen=True)
class DerivationStep:
    index: int
    rule: str
    parent: str
    children: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if not isinstance(self.rule, str) or not self.rule or "#" in self.rule or self.rule == "->" \
                or any(c.isspace() for c in self.rule):
            raise MalformedStep(f"step {self.index}: bad rule id {self.rule!r}")
        if not self.children:
            raise MalformedStep(f"step {self.index} generates nothing")
        if self.parent in self.children:
            raise MalformedStep(f"step {self.index}: {self.parent!r} cannot generate itself")


@dataclass(frozen=True)
class DerivationTrace:
    steps: tuple[DerivationStep, ...]

    def __post_init__(self):
        steps = tuple(s if isinstance(s, DerivationStep) else DerivationStep(*s) for s in self.steps)
        for a, b in zip(steps, steps[1:]):
            if b.index <= a.index:
                raise NonMonotoneStepIndex(f"step {b.index} follows step {a.index}")
        object.__setattr__(self, "steps", steps)

    def pairs(self) -> list[tuple[str, str]]:
        # multi-child steps split into one pair per child
        return [(s.parent, c) for s in self.steps for c in s.children]


def derivation_preorder(shape: Shape, trace: DerivationTrace) -> Preorder:
    return reflexive_transitive_closure(shape, trace.pairs())


def topology_from_derivation(shape: Shape, trace: DerivationTrace) -> Topology:
    """Parent <= child for every rule application, closed across steps."""
    return topology_from_preorder(derivation_preorder(shape, trace))


@dataclass(frozen=True)
class RelationMatrix:
    """k x k 0/1 matrix of a partial order on basis elements ``labels``.

    Accepts nested sequences or a 2-D numpy array; the partial-order axioms
    are checked on construction and violations raise.
    """

    labels: tuple[str, ...]
    m: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        labels = Shape(tuple(self.labels)).labels
        k = len(labels)
        rows = [list(r) for r in self.m]
        if len(rows) != k or any(len(r) != k for r in rows):
            raise NonSquare(f"matrix must be {k}x{k} to match {k} basis labels")
        m = []
        for i, r in enumerate(rows):
            row = []
            for j, x in enumerate(r):
                if isinstance(x, (str, bytes)) or x not in (0, 1):
                    raise BadEntry(f"entry ({i + 1},{j + 1}) is {x!r}, expected 0 or 1")
                row.append(int(x))
            m.append(tuple(row))
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "m", tuple(m))
        self._check_partial_order()

    @property
    def k(self) -> int:
        return len(self.labels)

    def _check_partial_order(self):
        m, lab, k = self.m, self.labels, self.k
        for i in range(k):
            if not m[i][i]:
                raise NotReflexive(f"m[{i + 1}][{i + 1}] must be 1 ({lab[i]})", lab[i])
        for i in range(k):
            for j in range(i + 1, k):
                if m[i][j] and m[j][i]:
                    w = (lab[i], lab[j])
                    raise NotAntisymmetric(f"{w[0]} <= {w[1]} and {w[1]} <= {w[0]}", w)
        for i in range(k):
            for j in range(k):
                if not m[i][j]:
                    continue
                for l in range(k):
                    if m[j][l] and not m[i][l]:
                        w = (lab[i], lab[j], lab[l])
                        raise NotTransitive(f"{w[0]} <= {w[1]} <= {w[2]} but not {w[0]} <= {w[2]}", w)

    def is_identity(self) -> bool:
        return sum(map(sum, self.m)) == self.k


def topology_from_relation_matrix(matrix: RelationMatrix) -> Topology:
    """Basis elements become points; ``b_i <= b_j`` where ``m[i][j] == 1``."""
    shape = Shape(matrix.labels)
    return topology_from_preorder(Preorder(shape, matrix.m))


def make_relation_matrix(labels: Sequence[str], m) -> RelationMatrix:
    return RelationMatrix(tuple(labels), m)

"""Separation axioms, connectedness, continuity, Hasse diagrams, enumeration."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Mapping

from .core import (
    Part,
    Preorder,
    Shape,
    Topology,
    bits,
    part_key,
    preorder_from_topology,
    union_closure,
)
from .errors import ShapeMismatch, TopologyError, UnknownPoint, UnsupportedSize

MAX_ENUMERATION_POINTS = 5
MAX_FAMILY_SCAN_POINTS = 4


def is_t0(topology: Topology) -> bool:
    """Distinct points have distinct minimal open parts."""
    return len(set(topology.minimal_masks)) == topology.shape.n


def is_discrete(topology: Topology) -> bool:
    return all(1 << p in topology.mask_set for p in range(topology.shape.n))


def is_t1(topology: Topology) -> bool:
    # checked literally (each point open and closed) rather than via
    # is_discrete, so the two can be compared in tests
    full = topology.shape.full
    opens = topology.mask_set
    return all(1 << p in opens and full & ~(1 << p) in opens for p in range(topology.shape.n))


def _clopen_masks(topology: Topology) -> list[int]:
    full = topology.shape.full
    return [m for m in topology.masks if full & ~m in topology.mask_set]


def is_connected(topology: Topology) -> bool:
    """True iff 0 and S are the only parts both open and closed."""
    return len(_clopen_masks(topology)) == 2


def connected_components(topology: Topology) -> list[Part]:
    """Partition into connected components, ordered by lowest point index."""
    n = topology.shape.n
    clopens = _clopen_masks(topology)
    comps = []
    seen = 0
    for p in range(n):
        if seen >> p & 1:
            continue
        comp = topology.shape.full
        for m in clopens:
            if m >> p & 1:
                comp &= m
        seen |= comp
        comps.append(Part(topology.shape, comp))
    return comps


def comparability_components(preorder: Preorder) -> list[Part]:
    """Components of the undirected graph joining every related pair."""
    n = preorder.shape.n
    nbrs = [preorder.down[p] | preorder.up[p] for p in range(n)]
    comps = []
    seen = 0
    for start in range(n):
        if seen >> start & 1:
            continue
        comp, frontier = 1 << start, 1 << start
        while frontier:
            nxt = 0
            for p in bits(frontier):
                nxt |= nbrs[p]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        comps.append(Part(preorder.shape, comp))
    return comps


def is_connected_by_order(topology: Topology) -> bool:
    return len(comparability_components(preorder_from_topology(topology))) == 1


@dataclass(frozen=True)
class ContinuousMapCandidate:
    """A total function between the points of two shapes, by index."""

    source: Shape
    target: Shape
    assignment: tuple[int, ...]

    def __post_init__(self):
        a = tuple(self.assignment)
        if len(a) != self.source.n:
            raise TopologyError(f"map defines {len(a)} images for {self.source.n} source points")
        for x in a:
            self.target.index(x)
        object.__setattr__(self, "assignment", a)

    @classmethod
    def from_labels(cls, source: Shape, target: Shape, mapping: Mapping[str, str]) -> ContinuousMapCandidate:
        missing = [lab for lab in source.labels if lab not in mapping]
        if missing:
            raise UnknownPoint(f"map is not total: no image for {', '.join(missing)}")
        for lab in mapping:
            source.index(lab)
        return cls(source, target, tuple(target.index(mapping[lab]) for lab in source.labels))

    def preimage(self, mask: int) -> int:
        return sum(1 << i for i, j in enumerate(self.assignment) if mask >> j & 1)


def _check_map_shapes(fmap: ContinuousMapCandidate, src_shape: Shape, dst_shape: Shape):
    if fmap.source != src_shape:
        raise ShapeMismatch(f"map source {fmap.source} differs from {src_shape}")
    if fmap.target != dst_shape:
        raise ShapeMismatch(f"map target {fmap.target} differs from {dst_shape}")


def is_continuous(fmap: ContinuousMapCandidate, src: Topology, dst: Topology) -> bool:
    """Preimage of every open of ``dst`` is open in ``src``."""
    _check_map_shapes(fmap, src.shape, dst.shape)
    return all(fmap.preimage(v) in src.mask_set for v in dst.masks)


def is_order_preserving(fmap: ContinuousMapCandidate, src: Preorder, dst: Preorder) -> bool:
    _check_map_shapes(fmap, src.shape, dst.shape)
    f = fmap.assignment
    return all(dst.rel[f[q]][f[p]] for q, p in src.pairs())


def default_shape(n: int) -> Shape:
    return Shape(tuple(f"p{i}" for i in range(1, n + 1)))


def _preorder_down_sets(n: int) -> Iterator[tuple[int, ...]]:
    # Assign down[p] point by point, keeping "p in down[r] => down[p] <= down[r]"
    # among assigned points; every complete assignment is a preorder.
    down = [0] * n

    def extend(p):
        if p == n:
            yield tuple(down)
            return
        pb = 1 << p
        others = ((1 << n) - 1) & ~pb
        sub = others
        while True:
            d = sub | pb
            ok = True
            for r in range(p):
                dr = down[r]
                if dr & pb and d & ~dr:
                    ok = False
                    break
                if d >> r & 1 and dr & ~d:
                    ok = False
                    break
            if ok:
                down[p] = d
                yield from extend(p + 1)
            if sub == 0:
                break
            sub = (sub - 1) & others

    yield from extend(0)


def _is_topology_by_scan(family: frozenset[int]) -> bool:
    return all(a | b in family and a & b in family for a, b in combinations(family, 2))


def _family_scan(n: int) -> Iterator[frozenset[int]]:
    full = (1 << n) - 1
    middle = list(range(1, full))
    for sel in range(1 << len(middle)):
        fam = {0, full}
        for i in bits(sel):
            fam.add(middle[i])
        fam = frozenset(fam)
        if _is_topology_by_scan(fam):
            yield fam


def _t0_by_scan(family: frozenset[int], n: int) -> bool:
    # some open separates each pair of points
    return all(any((m >> p & 1) != (m >> q & 1) for m in family) for p, q in combinations(range(n), 2))


def _family_order(masks: tuple[int, ...]):
    return (len(masks), tuple(part_key(m) for m in masks))


def enumerate_topologies(n: int, t0_only: bool = False, *, method: str = "preorder",
                         shape: Shape | None = None) -> Iterator[Topology]:
    """Yield every labelled topology on ``n`` points exactly once.

    ``method="preorder"`` enumerates preorders and builds the order topology
    of each; ``method="families"`` scans all families of parts and checks the
    axioms pairwise (only up to 4 points). Output is sorted by open count,
    then by canonical family order.
    """
    if not 1 <= n <= MAX_ENUMERATION_POINTS:
        raise UnsupportedSize(f"enumeration supports 1..{MAX_ENUMERATION_POINTS} points, got {n}")
    if shape is None:
        shape = default_shape(n)
    elif shape.n != n:
        raise ShapeMismatch(f"shape has {shape.n} points, asked for {n}")
    if method == "preorder":
        found = [tuple(sorted(union_closure(d), key=part_key)) for d in _preorder_down_sets(n)
                 if not t0_only or len(set(d)) == n]
    elif method == "families":
        if n > MAX_FAMILY_SCAN_POINTS:
            raise UnsupportedSize(f"family scan supports at most {MAX_FAMILY_SCAN_POINTS} points")
        found = [tuple(sorted(f, key=part_key)) for f in _family_scan(n)
                 if not t0_only or _t0_by_scan(f, n)]
    else:
        raise ValueError(f"unknown enumeration method {method!r}")
    found.sort(key=_family_order)
    for masks in found:
        yield Topology(shape, masks)


def count_topologies(n: int, t0_only: bool = False, method: str = "preorder") -> int:
    return sum(1 for _ in enumerate_topologies(n, t0_only, method=method))


@dataclass(frozen=True)
class HasseDiagram:
    """Covering graph of the condensed order; nodes are equivalence classes."""

    shape: Shape
    nodes: tuple[Part, ...]
    edges: tuple[tuple[Part, Part], ...]

    def label_edges(self) -> list[tuple[tuple[str, ...], tuple[str, ...]]]:
        return [(lo.labels, hi.labels) for lo, hi in self.edges]


def condensation_classes(preorder: Preorder) -> list[int]:
    seen = 0
    classes = []
    for p in range(preorder.shape.n):
        if seen >> p & 1:
            continue
        c = preorder.down[p] & preorder.up[p]
        seen |= c
        classes.append(c)
    return classes


def hasse_edges(preorder: Preorder) -> HasseDiagram:
    classes = condensation_classes(preorder)
    reps = [next(bits(c)) for c in classes]
    k = len(classes)
    less = [[i != j and preorder.rel[reps[i]][reps[j]] for j in range(k)] for i in range(k)]
    edges = []
    for i in range(k):
        for j in range(k):
            if less[i][j] and not any(less[i][m] and less[m][j] for m in range(k)):
                edges.append((i, j))
    shape = preorder.shape
    nodes = tuple(Part(shape, c) for c in classes)
    return HasseDiagram(shape, nodes, tuple((nodes[i], nodes[j]) for i, j in edges))

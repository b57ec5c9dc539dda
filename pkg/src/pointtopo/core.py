"""Shapes made with points, their parts, topologies and preorders.

A part is stored as a bit mask over point indices (bit ``i`` set means point
``i`` is a member). All heavy lifting happens on plain ints; the
:class:`Part` wrapper exists for the public surface.

Orientation: ``Preorder.rel[q][p]`` is true when ``q <= p``, i.e. when ``q``
lies in the minimal open part of ``p``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateLabel,
    EmptyLabelList,
    MalformedLabel,
    MissingEmptyPart,
    MissingFullPart,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    NotReflexive,
    NotTransitive,
    ShapeMismatch,
    TopologyError,
    UnknownPoint,
    UnsupportedSize,
)

# Bit-mask width cap for anything that materializes a whole topology.
MAX_POINTS = 16

_RESERVED_TOKENS = {"0", "->", "<=", "=>"}
_FORBIDDEN_CHARS = set('#",{}:')


def part_key(mask: int) -> tuple[int, int]:
    """Canonical ordering key: cardinality first, then the mask value."""
    return (mask.bit_count(), mask)


def bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def union_closure(masks: Iterable[int]) -> set[int]:
    """All unions of subfamilies of ``masks``, the empty union included."""
    out = {0}
    for m in set(masks):
        if m in out:
            continue
        out |= {o | m for o in out}
    return out


def minimal_open_masks(masks: Iterable[int], n: int) -> list[int]:
    """Intersection of all members of ``masks`` containing each point."""
    full = (1 << n) - 1
    mins = [full] * n
    for m in masks:
        for i in bits(m):
            mins[i] &= m
    return mins


def is_topology_masks(masks: set[int] | frozenset[int], n: int) -> bool:
    # A family containing 0 and S is a topology iff every U_p is a member and
    # the family equals the union closure of the U_p: then A & B is the union
    # of U_p over p in A & B.
    full = (1 << n) - 1
    if 0 not in masks or full not in masks:
        return False
    mins = minimal_open_masks(masks, n)
    if any(u not in masks for u in mins):
        return False
    return union_closure(mins) == set(masks)


def _check_label(label) -> str:
    if not isinstance(label, str) or not label:
        raise MalformedLabel(f"label must be a non-empty string, got {label!r}")
    if any(c.isspace() for c in label):
        raise MalformedLabel(f"label {label!r} contains whitespace")
    if label in _RESERVED_TOKENS or _FORBIDDEN_CHARS & set(label):
        raise MalformedLabel(f"label {label!r} is reserved or contains one of {''.join(sorted(_FORBIDDEN_CHARS))}")
    return label


@dataclass(frozen=True)
class Shape:
    """An ordered finite set of labelled points; label order fixes indices."""

    labels: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        labels = tuple(self.labels)
        if not labels:
            raise EmptyLabelList("a shape needs at least one point")
        index = {}
        for i, lab in enumerate(labels):
            _check_label(lab)
            if lab in index:
                raise DuplicateLabel(f"duplicate point label {lab!r}")
            index[lab] = i
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", index)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def index(self, point) -> int:
        """Resolve a label or an index to a point index."""
        if isinstance(point, str):
            try:
                return self._index[point]
            except KeyError:
                raise UnknownPoint(f"no point labelled {point!r}") from None
        if isinstance(point, int) and not isinstance(point, bool) and 0 <= point < self.n:
            return point
        raise UnknownPoint(f"no point {point!r} in a shape of {self.n} points")

    def mask_of(self, points: Iterable) -> int:
        m = 0
        for p in points:
            m |= 1 << self.index(p)
        return m

    def part(self, *points) -> Part:
        return Part(self, self.mask_of(points))

    def __len__(self):
        return self.n

    def __str__(self):
        return "{" + ",".join(self.labels) + "}"


def make_shape(labels: Sequence[str]) -> Shape:
    return Shape(tuple(labels))


@dataclass(frozen=True)
class Part:
    """A subset of a shape's points. ``|`` is sum, ``&`` is product."""

    shape: Shape
    mask: int

    def __post_init__(self):
        if not 0 <= self.mask <= self.shape.full:
            raise UnknownPoint(f"mask {self.mask:#x} has bits outside a {self.shape.n}-point shape")

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(bits(self.mask))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.shape.labels[i] for i in bits(self.mask))

    def is_empty(self) -> bool:
        return self.mask == 0

    def is_full(self) -> bool:
        return self.mask == self.shape.full

    def _other(self, other) -> int:
        if not isinstance(other, Part):
            return NotImplemented
        if other.shape != self.shape:
            raise ShapeMismatch("parts belong to different shapes")
        return other.mask

    def __or__(self, other):
        m = self._other(other)
        return m if m is NotImplemented else Part(self.shape, self.mask | m)

    def __and__(self, other):
        m = self._other(other)
        return m if m is NotImplemented else Part(self.shape, self.mask & m)

    def issubset(self, other: Part) -> bool:
        return self.mask & ~self._other(other) == 0

    def complement(self) -> Part:
        return Part(self.shape, self.shape.full & ~self.mask)

    def __contains__(self, point) -> bool:
        return bool(self.mask >> self.shape.index(point) & 1)

    def __iter__(self):
        return iter(self.labels)

    def __len__(self):
        return self.mask.bit_count()

    def __str__(self):
        if not self.mask:
            return "0"
        return "{" + ",".join(self.labels) + "}"


def _as_mask(shape: Shape, x) -> int:
    if isinstance(x, Part):
        if x.shape != shape:
            raise ShapeMismatch(f"part {x} belongs to another shape")
        return x.mask
    if isinstance(x, int) and not isinstance(x, bool):
        if not 0 <= x <= shape.full:
            raise UnknownPoint(f"mask {x:#x} has bits outside a {shape.n}-point shape")
        return x
    return shape.mask_of(x)


@dataclass(frozen=True)
class Topology:
    """A family of open parts kept in canonical order.

    The constructor canonicalizes but does not check the axioms; use
    :func:`validate_topology` for untrusted families.
    """

    shape: Shape
    masks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "masks", tuple(sorted(set(self.masks), key=part_key)))

    @cached_property
    def mask_set(self) -> frozenset[int]:
        return frozenset(self.masks)

    @property
    def opens(self) -> tuple[Part, ...]:
        return tuple(Part(self.shape, m) for m in self.masks)

    def is_open(self, part) -> bool:
        return _as_mask(self.shape, part) in self.mask_set

    def is_closed(self, part) -> bool:
        return self.shape.full & ~_as_mask(self.shape, part) in self.mask_set

    @cached_property
    def minimal_masks(self) -> tuple[int, ...]:
        return tuple(minimal_open_masks(self.masks, self.shape.n))

    def __contains__(self, part) -> bool:
        return self.is_open(part)

    def __iter__(self):
        return iter(self.opens)

    def __len__(self):
        return len(self.masks)


def validate_topology(shape: Shape, family: Iterable) -> Topology:
    """Check the topology axioms and return the canonical :class:`Topology`.

    ``family`` may hold :class:`Part` objects, raw masks, or iterables of
    point labels. Failures raise with a witness pair of offending parts.
    """
    masks = {_as_mask(shape, x) for x in family}
    if 0 not in masks:
        raise MissingEmptyPart("family lacks the empty part 0")
    if shape.full not in masks:
        raise MissingFullPart(f"family lacks the full shape {shape}")
    if shape.n <= MAX_POINTS and is_topology_masks(masks, shape.n):
        return Topology(shape, tuple(masks))
    ordered = sorted(masks, key=part_key)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            if a | b not in masks:
                w = (Part(shape, a), Part(shape, b))
                raise NotClosedUnderUnion(f"{w[0]} + {w[1]} is not in the family", w)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            if a & b not in masks:
                w = (Part(shape, a), Part(shape, b))
                raise NotClosedUnderIntersection(f"{w[0]} . {w[1]} is not in the family", w)
    return Topology(shape, tuple(masks))


def minimal_open_part(topology: Topology, p) -> Part:
    i = topology.shape.index(p)
    return Part(topology.shape, topology.minimal_masks[i])


@dataclass(frozen=True)
class Preorder:
    """A reflexive, transitive relation; ``rel[q][p]`` means ``q <= p``."""

    shape: Shape
    rel: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        n = self.shape.n
        rel = tuple(tuple(bool(x) for x in row) for row in self.rel)
        if len(rel) != n or any(len(row) != n for row in rel):
            raise TopologyError(f"relation must be {n}x{n}")
        object.__setattr__(self, "rel", rel)
        labels = self.shape.labels
        for p in range(n):
            if not rel[p][p]:
                raise NotReflexive(f"{labels[p]} <= {labels[p]} is missing", labels[p])
        down = self.down
        for r in range(n):
            for p in bits(down[r]):
                extra = down[p] & ~down[r]
                if extra:
                    q = next(bits(extra))
                    w = (labels[q], labels[p], labels[r])
                    raise NotTransitive(f"{w[0]} <= {w[1]} <= {w[2]} but not {w[0]} <= {w[2]}", w)

    @classmethod
    def from_down_sets(cls, shape: Shape, downs: Sequence[int]) -> Preorder:
        """Build from ``downs[p]`` = mask of all ``q <= p`` (the minimal opens)."""
        n = shape.n
        return cls(shape, tuple(tuple(bool(downs[p] >> q & 1) for p in range(n)) for q in range(n)))

    @cached_property
    def down(self) -> tuple[int, ...]:
        n = self.shape.n
        return tuple(sum(1 << q for q in range(n) if self.rel[q][p]) for p in range(n))

    @cached_property
    def up(self) -> tuple[int, ...]:
        n = self.shape.n
        return tuple(sum(1 << p for p in range(n) if self.rel[q][p]) for q in range(n))

    def le(self, q, p) -> bool:
        return self.rel[self.shape.index(q)][self.shape.index(p)]

    def pairs(self, reflexive: bool = False) -> list[tuple[int, int]]:
        """Related index pairs ``(q, p)`` in lexicographic order."""
        n = self.shape.n
        return [(q, p) for q in range(n) for p in range(n) if self.rel[q][p] and (reflexive or q != p)]

    def is_antisymmetric(self) -> bool:
        n = self.shape.n
        return not any(self.rel[q][p] and self.rel[p][q] for q in range(n) for p in range(q + 1, n))

    def __len__(self):
        return sum(map(sum, self.rel))


def _closed_up_sets(n: int, pairs: Iterable[tuple[int, int]]) -> list[int]:
    # Warshall over bit rows: up[q] holds every p with q <= p.
    up = [1 << i for i in range(n)]
    for q, p in pairs:
        up[q] |= 1 << p
    for k in range(n):
        kb = 1 << k
        for i in range(n):
            if up[i] & kb:
                up[i] |= up[k]
    return up


def reflexive_transitive_closure(shape: Shape, pairs: Iterable[tuple], strict: bool = False) -> Preorder:
    """Smallest preorder containing every ``(q, p)`` pair, read as ``q <= p``.

    Points may be labels or indices. With ``strict=True`` the pairs (plus the
    implied reflexive ones) must already be transitive, otherwise
    :class:`NotTransitive` is raised instead of closing them.
    """
    idx = [(shape.index(q), shape.index(p)) for q, p in pairs]
    n = shape.n
    if strict:
        rel = [[q == p for p in range(n)] for q in range(n)]
        for q, p in idx:
            rel[q][p] = True
        return Preorder(shape, rel)
    up = _closed_up_sets(n, idx)
    return Preorder(shape, tuple(tuple(bool(up[q] >> p & 1) for p in range(n)) for q in range(n)))


def identity_preorder(shape: Shape) -> Preorder:
    return reflexive_transitive_closure(shape, [])


def _check_size(shape: Shape):
    if shape.n > MAX_POINTS:
        raise UnsupportedSize(f"{shape.n} points exceeds the cap of {MAX_POINTS}")


def topology_from_preorder(preorder: Preorder) -> Topology:
    """Order topology: U_p is the sum of all q <= p; opens are unions of U_p."""
    _check_size(preorder.shape)
    return Topology(preorder.shape, tuple(union_closure(preorder.down)))


def preorder_from_topology(topology: Topology) -> Preorder:
    """Specialization preorder: q <= p iff q is in the minimal open part of p."""
    return Preorder.from_down_sets(topology.shape, topology.minimal_masks)


@dataclass(frozen=True)
class Basis:
    shape: Shape
    masks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "masks", tuple(sorted(set(self.masks) | {0}, key=part_key)))

    @property
    def elements(self) -> tuple[Part, ...]:
        return tuple(Part(self.shape, m) for m in self.masks)

    def generate(self) -> Topology:
        _check_size(self.shape)
        return Topology(self.shape, tuple(union_closure(self.masks)))

    def __len__(self):
        return len(self.masks)


def minimal_basis(topology: Topology) -> Basis:
    """Distinct minimal open parts plus the empty part."""
    return Basis(topology.shape, topology.minimal_masks)


def discrete_topology(shape: Shape) -> Topology:
    _check_size(shape)
    return Topology(shape, tuple(range(shape.full + 1)))


def indiscrete_topology(shape: Shape) -> Topology:
    return Topology(shape, (0, shape.full))

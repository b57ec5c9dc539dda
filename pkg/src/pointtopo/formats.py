"""Line-oriented text formats.

Every format allows ``#`` comments and blank lines. Formats that list
relations (preorder, graph, derivation) take an optional ``points:`` header;
without it the shape is the labels in order of first appearance.

=========== ==========================================================
shape       ``points: a b c``
topology    ``topology over: a b c`` then one open per line, ``0`` = empty
preorder    ``q <= p`` per line
graph       ``p -> q`` per line (directed edge from p to q, so q <= p)
matrix      ``basis: b1 .. bk`` then k rows of k 0/1 entries
derivation  ``step <n>: <rule> <parent> -> <child> [<child> ...]``
map         ``<source> => <target>`` per line
=========== ==========================================================

Writers emit the canonical form, so ``parse(serialize(x)) == x``.
"""
from __future__ import annotations

import re
from typing import Iterator

from .analysis import ContinuousMapCandidate, HasseDiagram
from .builders import DerivationStep, DerivationTrace, DirectedGraph, RelationMatrix
from .core import Basis, Part, Preorder, Shape, Topology, reflexive_transitive_closure, validate_topology
from .errors import ParseError, TopologyError

_STEP_RE = re.compile(r"^step\s+(-?\d+)\s*:\s*(\S+)\s+(\S+)\s+->\s+(.+)$")


def content_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _header(line: str, key: str, lineno: int) -> list[str] | None:
    head, sep, rest = line.partition(":")
    if not sep or head.strip() != key:
        return None
    labels = rest.split()
    if not labels:
        raise ParseError(f"'{key}:' header lists no labels", lineno)
    return labels


def _shape(labels, lineno) -> Shape:
    try:
        return Shape(tuple(labels))
    except TopologyError as e:
        raise ParseError(str(e), lineno) from None


def _index(shape: Shape, label: str, lineno: int) -> int:
    try:
        return shape.index(label)
    except TopologyError as e:
        raise ParseError(str(e), lineno) from None


class _ShapeCollector:
    """Shape from a ``points:`` header, or labels in order of first use."""

    def __init__(self):
        self.declared = None
        self.seen = []
        self.first_line = None

    def header(self, lineno, line) -> bool:
        labels = _header(line, "points", lineno)
        if labels is None:
            return False
        if self.declared is not None or self.seen:
            raise ParseError("'points:' header must come first and only once", lineno)
        self.declared = _shape(labels, lineno)
        return True

    def use(self, label, lineno):
        if self.first_line is None:
            self.first_line = lineno
        if self.declared is not None:
            _index(self.declared, label, lineno)
        elif label not in self.seen:
            self.seen.append(label)

    def shape(self) -> Shape:
        if self.declared is not None:
            return self.declared
        if not self.seen:
            raise ParseError("no points: add a 'points:' header")
        return _shape(self.seen, self.first_line)


def _points_header(shape: Shape) -> str:
    return "points: " + " ".join(shape.labels) + "\n"


# shape

def serialize_shape(shape: Shape) -> str:
    return _points_header(shape)


def parse_shape(text: str) -> Shape:
    lines = list(content_lines(text))
    if len(lines) != 1:
        raise ParseError(f"expected one 'points:' line, found {len(lines)} lines")
    lineno, line = lines[0]
    labels = _header(line, "points", lineno)
    if labels is None:
        raise ParseError("expected 'points: <label> ...'", lineno)
    return _shape(labels, lineno)


# topology

def _part_line(mask: int, shape: Shape) -> str:
    return " ".join(Part(shape, mask).labels) or "0"


def serialize_topology(topology: Topology, header: str = "topology over") -> str:
    shape = topology.shape
    out = [f"{header}: " + " ".join(shape.labels)]
    out += [_part_line(m, shape) for m in topology.masks]
    return "\n".join(out) + "\n"


def read_family(text: str, header: str = "topology over") -> tuple[Shape, list[int]]:
    """Parse a topology-style file without checking the topology axioms."""
    it = content_lines(text)
    first = next(it, None)
    if first is None:
        raise ParseError(f"empty input, expected '{header}:' header")
    lineno, line = first
    labels = _header(line, header, lineno)
    if labels is None:
        raise ParseError(f"expected '{header}: <label> ...'", lineno)
    shape = _shape(labels, lineno)
    masks = []
    for lineno, line in it:
        toks = line.split()
        if toks == ["0"]:
            masks.append(0)
            continue
        m = 0
        for t in toks:
            b = 1 << _index(shape, t, lineno)
            if m & b:
                raise ParseError(f"point {t!r} repeated", lineno)
            m |= b
        masks.append(m)
    return shape, masks


def parse_topology(text: str) -> Topology:
    shape, masks = read_family(text)
    return validate_topology(shape, masks)


def serialize_basis(basis: Basis) -> str:
    shape = basis.shape
    out = ["basis over: " + " ".join(shape.labels)]
    out += [_part_line(m, shape) for m in basis.masks]
    return "\n".join(out) + "\n"


def parse_basis(text: str) -> Basis:
    shape, masks = read_family(text, "basis over")
    return Basis(shape, tuple(masks))


# preorder

def serialize_preorder(preorder: Preorder) -> str:
    lab = preorder.shape.labels
    out = _points_header(preorder.shape)
    out += "".join(f"{lab[q]} <= {lab[p]}\n" for q, p in preorder.pairs())
    return out


def _relation_lines(text: str, op: str):
    shapes = _ShapeCollector()
    pairs = []
    for lineno, line in content_lines(text):
        if shapes.header(lineno, line):
            continue
        toks = line.split()
        if len(toks) != 3 or toks[1] != op:
            raise ParseError(f"expected '<label> {op} <label>', got {line!r}", lineno)
        shapes.use(toks[0], lineno)
        shapes.use(toks[2], lineno)
        pairs.append((toks[0], toks[2]))
    return shapes.shape(), pairs


def parse_preorder(text: str, strict: bool = False) -> Preorder:
    """Read ``q <= p`` lines, closing them unless ``strict``."""
    shape, pairs = _relation_lines(text, "<=")
    return reflexive_transitive_closure(shape, pairs, strict=strict)


# graph

def serialize_graph(graph: DirectedGraph) -> str:
    return _points_header(graph.shape) + "".join(f"{p} -> {q}\n" for p, q in graph.edges)


def parse_graph(text: str) -> DirectedGraph:
    shape, edges = _relation_lines(text, "->")
    return DirectedGraph(shape, tuple(edges))


# matrix

def serialize_matrix(matrix: RelationMatrix) -> str:
    out = "basis: " + " ".join(matrix.labels) + "\n"
    return out + "".join(" ".join(map(str, row)) + "\n" for row in matrix.m)


def parse_matrix(text: str) -> RelationMatrix:
    """Partial-order violations propagate as their own exception types."""
    it = content_lines(text)
    first = next(it, None)
    if first is None:
        raise ParseError("empty input, expected 'basis:' header")
    lineno, line = first
    labels = _header(line, "basis", lineno)
    if labels is None:
        raise ParseError("expected 'basis: <label> ...'", lineno)
    _shape(labels, lineno)
    rows = []
    for lineno, line in it:
        toks = line.split()
        if len(toks) != len(labels):
            raise ParseError(f"row has {len(toks)} entries, expected {len(labels)}", lineno)
        if any(t not in ("0", "1") for t in toks):
            raise ParseError(f"entries must be 0 or 1, got {line!r}", lineno)
        rows.append([int(t) for t in toks])
    if len(rows) != len(labels):
        raise ParseError(f"matrix has {len(rows)} rows, expected {len(labels)}")
    return RelationMatrix(tuple(labels), rows)


# derivation

def serialize_derivation(trace: DerivationTrace, shape: Shape | None = None) -> str:
    out = _points_header(shape) if shape is not None else ""
    for s in trace.steps:
        out += f"step {s.index}: {s.rule} {s.parent} -> {' '.join(s.children)}\n"
    return out


def parse_derivation(text: str) -> tuple[Shape, DerivationTrace]:
    shapes = _ShapeCollector()
    steps = []
    for lineno, line in content_lines(text):
        if shapes.header(lineno, line):
            continue
        mt = _STEP_RE.match(line)
        if not mt:
            raise ParseError(f"expected 'step <n>: <rule> <parent> -> <child> ...', got {line!r}", lineno)
        idx, rule, parent, rest = mt.groups()
        children = rest.split()
        for lab in [parent, *children]:
            shapes.use(lab, lineno)
        try:
            steps.append(DerivationStep(int(idx), rule, parent, tuple(children)))
        except TopologyError as e:
            raise ParseError(str(e), lineno) from None
    shape = shapes.shape()
    try:
        trace = DerivationTrace(tuple(steps))
    except TopologyError as e:
        raise ParseError(str(e)) from None
    return shape, trace


# continuous map

def serialize_map(fmap: ContinuousMapCandidate) -> str:
    src, dst = fmap.source.labels, fmap.target.labels
    return "".join(f"{src[i]} => {dst[j]}\n" for i, j in enumerate(fmap.assignment))


def parse_map(text: str, source: Shape, target: Shape) -> ContinuousMapCandidate:
    mapping = {}
    for lineno, line in content_lines(text):
        toks = line.split()
        if len(toks) != 3 or toks[1] != "=>":
            raise ParseError(f"expected '<source> => <target>', got {line!r}", lineno)
        a, b = toks[0], toks[2]
        _index(source, a, lineno)
        _index(target, b, lineno)
        if a in mapping:
            raise ParseError(f"{a!r} mapped twice", lineno)
        mapping[a] = b
    return ContinuousMapCandidate.from_labels(source, target, mapping)


# hasse diagrams

def class_name(part: Part) -> str:
    labels = part.labels
    return labels[0] if len(labels) == 1 else "{" + ",".join(labels) + "}"


def hasse_to_text(diagram: HasseDiagram) -> str:
    """Covering pairs as ``lower <= upper`` lines (a preorder file when T0)."""
    out = "points: " + " ".join(class_name(c) for c in diagram.nodes) + "\n"
    return out + "".join(f"{class_name(lo)} <= {class_name(hi)}\n" for lo, hi in diagram.edges)


def hasse_to_dot(diagram: HasseDiagram, name: str = "hasse") -> str:
    out = [f"digraph {name} {{", "  rankdir=BT;"]
    out += [f'  "{class_name(c)}";' for c in diagram.nodes]
    out += [f'  "{class_name(lo)}" -> "{class_name(hi)}";' for lo, hi in diagram.edges]
    out.append("}")
    return "\n".join(out) + "\n"

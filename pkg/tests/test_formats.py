import random

import pytest

from pointtopo import formats, make_shape, minimal_basis
from pointtopo.errors import NotAntisymmetric, NotTransitive, ParseError, TopologyError

import generators as gen

FIG5_TOPOLOGY_FILE = """\
topology over: p1 p2 p3 p4 p5 p6
0
p4
p3 p4
p4 p6
p1 p3 p4
p3 p4 p6
p4 p5 p6
p1 p3 p4 p6
p3 p4 p5 p6
p1 p3 p4 p5 p6
p1 p2 p3 p4 p5 p6
"""


def test_figure5_topology_text(fig5_topology):
    assert formats.serialize_topology(fig5_topology) == FIG5_TOPOLOGY_FILE
    assert formats.parse_topology(FIG5_TOPOLOGY_FILE) == fig5_topology


def test_topology_comments_and_order():
    text = "# a comment\ntopology over: a b\n\na b  # whole\n0\na\n"
    t = formats.parse_topology(text)
    assert t.masks == (0, 1, 3)


def test_preorder_text(fig5_preorder):
    text = formats.serialize_preorder(fig5_preorder)
    assert text.splitlines()[:3] == ["points: p1 p2 p3 p4 p5 p6", "p1 <= p2", "p3 <= p1"]
    assert formats.parse_preorder(text, strict=True) == fig5_preorder


def test_preorder_closes_by_default():
    pre = formats.parse_preorder("a <= b\nb <= c\n")
    assert pre.shape.labels == ("a", "b", "c")
    assert pre.le("a", "c")
    with pytest.raises(NotTransitive):
        formats.parse_preorder("a <= b\nb <= c\n", strict=True)


def test_preorder_header_keeps_isolated_points():
    pre = formats.parse_preorder("points: a b z\na <= b\n")
    assert pre.shape.n == 3


def test_matrix_text():
    m = formats.parse_matrix("basis: b1 b2\n1 1\n0 1\n")
    assert m.m == ((1, 1), (0, 1))
    with pytest.raises(NotAntisymmetric):
        formats.parse_matrix("basis: b1 b2\n1 1\n1 1\n")


def test_derivation_text():
    shape, trace = formats.parse_derivation("step 1: r1 a -> b c\nstep 2: r2 b -> d\n")
    assert shape.labels == ("a", "b", "c", "d")
    assert trace.pairs() == [("a", "b"), ("a", "c"), ("b", "d")]


def test_map_text():
    src, dst = make_shape("ab"), make_shape("xy")
    f = formats.parse_map("a => y\nb => y\n", src, dst)
    assert f.assignment == (1, 1)
    with pytest.raises(TopologyError):
        formats.parse_map("a => y\n", src, dst)


def test_basis_text(fig5_topology):
    b = minimal_basis(fig5_topology)
    assert formats.parse_basis(formats.serialize_basis(b)) == b


def test_hasse_dot(fig5_preorder):
    from pointtopo import hasse_edges
    dot = formats.hasse_to_dot(hasse_edges(fig5_preorder))
    edge_lines = sorted(line.strip() for line in dot.splitlines() if "->" in line)
    assert edge_lines == sorted([
        '"p4" -> "p6";', '"p4" -> "p3";', '"p6" -> "p5";',
        '"p3" -> "p1";', '"p1" -> "p2";', '"p5" -> "p2";'])
    assert dot.startswith("digraph hasse {") and dot.rstrip().endswith("}")


def test_hasse_dot_condensed_node_names():
    from pointtopo import hasse_edges
    pre = formats.parse_preorder("a <= b\nb <= a\nb <= c\n")
    dot = formats.hasse_to_dot(hasse_edges(pre))
    assert '"{a,b}" -> "c";' in dot


@pytest.mark.parametrize("text", [
    "",
    "points a b\n",
    "topology over:\n",
    "topology over: a b\na c\n",
    "topology over: a a\n",
    "topology over: a b\na a\n",
])
def test_bad_topology_files(text):
    with pytest.raises(ParseError):
        formats.read_family(text)


@pytest.mark.parametrize("text", ["a < b\n", "a <= \n", "points: a\nb <= a\n", "a <= b\npoints: a b\n"])
def test_bad_preorder_files(text):
    with pytest.raises(ParseError):
        formats.parse_preorder(text)


@pytest.mark.parametrize("text", [
    "basis: a b\n1 0\n", "basis: a b\n1 0\n0 2\n", "1 0\n0 1\n", "basis: a b\n1 0 0\n0 1\n",
])
def test_bad_matrix_files(text):
    with pytest.raises(ParseError):
        formats.parse_matrix(text)


@pytest.mark.parametrize("text", ["step x: r a -> b\n", "step 1: r a b\n", "step 2: r a -> b\nstep 1: r b -> c\n"])
def test_bad_derivation_files(text):
    with pytest.raises(ParseError):
        formats.parse_derivation(text)


def test_small_roundtrips():
    rng = random.Random(7)
    for _ in range(50):
        s = gen.random_shape(rng)
        assert formats.parse_shape(formats.serialize_shape(s)) == s
        g = gen.random_graph(rng)
        assert formats.parse_graph(formats.serialize_graph(g)) == g
        shape, trace = gen.random_derivation(rng)
        assert formats.parse_derivation(formats.serialize_derivation(trace, shape)) == (shape, trace)

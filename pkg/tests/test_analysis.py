import itertools

import pytest

from pointtopo import (
    ContinuousMapCandidate,
    Preorder,
    comparability_components,
    connected_components,
    discrete_topology,
    enumerate_topologies,
    hasse_edges,
    indiscrete_topology,
    is_connected,
    is_connected_by_order,
    is_continuous,
    is_discrete,
    is_order_preserving,
    is_t0,
    is_t1,
    make_shape,
    preorder_from_topology,
    reflexive_transitive_closure,
    topology_from_preorder,
)
from pointtopo.errors import ShapeMismatch, UnsupportedSize

import oracles


def chain_pair_topology():
    s = make_shape("abcd")
    return topology_from_preorder(reflexive_transitive_closure(s, [("a", "b"), ("c", "d")]))


class TestSeparation:
    def test_figure5_t0(self, fig5_topology):
        assert is_t0(fig5_topology)

    def test_indiscrete_not_t0(self):
        assert not is_t0(indiscrete_topology(make_shape("ab")))

    def test_mutual_pair_not_t0(self):
        s = make_shape("abc")
        pre = reflexive_transitive_closure(s, [("a", "b"), ("b", "a")])
        t = topology_from_preorder(pre)
        assert t.minimal_masks[0] == t.minimal_masks[1]
        assert not is_t0(t)

    def test_discrete(self, fig5_topology):
        assert is_discrete(discrete_topology(make_shape("abc")))
        assert not is_discrete(fig5_topology)
        assert is_discrete(indiscrete_topology(make_shape("a")))

    def test_t1(self, fig5_topology):
        assert is_t1(discrete_topology(make_shape("abcd")))
        assert not is_t1(fig5_topology)
        assert not is_t1(indiscrete_topology(make_shape("ab")))


class TestConnectedness:
    def test_figure5(self, fig5_topology):
        assert is_connected(fig5_topology)
        comps = connected_components(fig5_topology)
        assert len(comps) == 1 and comps[0].is_full()

    def test_discrete_two(self):
        assert not is_connected(discrete_topology(make_shape("ab")))

    def test_indiscrete(self):
        assert is_connected(indiscrete_topology(make_shape("abc")))

    def test_components_discrete(self):
        comps = connected_components(discrete_topology(make_shape(["p1", "p2", "p3"])))
        assert [c.labels for c in comps] == [("p1",), ("p2",), ("p3",)]

    def test_two_chains(self):
        t = chain_pair_topology()
        assert [c.labels for c in connected_components(t)] == [("a", "b"), ("c", "d")]
        assert [c.labels for c in comparability_components(preorder_from_topology(t))] == [
            ("a", "b"), ("c", "d")]
        assert not is_connected(t) and not is_connected_by_order(t)

    def test_v_shape_is_connected(self):
        # a <= b, c <= b: a and c are only joined through b
        s = make_shape("abc")
        t = topology_from_preorder(reflexive_transitive_closure(s, [("a", "b"), ("c", "b")]))
        assert is_connected(t) and is_connected_by_order(t)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_against_oracle(self, n):
        for t in enumerate_topologies(n):
            assert is_connected(t) == oracles.connected_by_clopens(oracles.as_sets(t), n)


class TestContinuity:
    def test_identity(self, fig5_topology):
        s = fig5_topology.shape
        f = ContinuousMapCandidate(s, s, range(6))
        assert is_continuous(f, fig5_topology, fig5_topology)

    def test_constant(self, fig5_topology):
        s = fig5_topology.shape
        d = discrete_topology(make_shape("xy"))
        f = ContinuousMapCandidate(s, d.shape, [1] * 6)
        assert is_continuous(f, fig5_topology, d)

    def test_indiscrete_to_discrete(self):
        src = indiscrete_topology(make_shape("ab"))
        dst = discrete_topology(make_shape("xy"))
        f = ContinuousMapCandidate.from_labels(src.shape, dst.shape, {"a": "x", "b": "y"})
        assert not is_continuous(f, src, dst)
        assert is_continuous(ContinuousMapCandidate(dst.shape, src.shape, (0, 1)), dst, src)

    def test_shape_mismatch(self):
        a = discrete_topology(make_shape("ab"))
        b = discrete_topology(make_shape("xy"))
        f = ContinuousMapCandidate(a.shape, a.shape, (0, 1))
        with pytest.raises(ShapeMismatch):
            is_continuous(f, a, b)

    def test_matches_oracle_n2(self):
        tops = list(enumerate_topologies(2))
        for src, dst in itertools.product(tops, repeat=2):
            for f in itertools.product(range(2), repeat=2):
                m = ContinuousMapCandidate(src.shape, dst.shape, f)
                expect = oracles.continuous(f, oracles.as_sets(src), oracles.as_sets(dst))
                assert is_continuous(m, src, dst) == expect
                assert is_order_preserving(m, preorder_from_topology(src), preorder_from_topology(dst)) == expect


class TestEnumeration:
    def test_n1(self):
        tops = list(enumerate_topologies(1))
        assert len(tops) == 1 and tops[0].masks == (0, 1)

    def test_n3_counts(self):
        assert sum(1 for _ in enumerate_topologies(3)) == 29
        assert sum(1 for _ in enumerate_topologies(3, t0_only=True)) == 19

    def test_n3_matches_brute_force(self):
        expect = set(oracles.all_topologies(3))
        got = [oracles.as_sets(t) for t in enumerate_topologies(3)]
        assert len(got) == len(set(got))
        assert set(got) == expect

    def test_order(self):
        tops = list(enumerate_topologies(3))
        sizes = [len(t) for t in tops]
        assert sizes == sorted(sizes)
        assert tops[0] == indiscrete_topology(tops[0].shape)
        assert tops[-1] == discrete_topology(tops[-1].shape)

    @pytest.mark.parametrize("n", [0, 6])
    def test_size_cap(self, n):
        with pytest.raises(UnsupportedSize):
            next(enumerate_topologies(n))

    def test_family_scan_cap(self):
        with pytest.raises(UnsupportedSize):
            next(enumerate_topologies(5, method="families"))


class TestHasse:
    def test_figure5(self, fig5_preorder):
        d = hasse_edges(fig5_preorder)
        assert len(d.nodes) == 6
        assert sorted(d.label_edges()) == sorted([
            (("p4",), ("p6",)), (("p4",), ("p3",)), (("p6",), ("p5",)),
            (("p3",), ("p1",)), (("p1",), ("p2",)), (("p5",), ("p2",))])

    def test_identity(self):
        d = hasse_edges(reflexive_transitive_closure(make_shape("abc"), []))
        assert len(d.nodes) == 3 and d.edges == ()

    def test_condensed(self):
        s = make_shape("abc")
        d = hasse_edges(reflexive_transitive_closure(s, [("a", "b"), ("b", "a"), ("b", "c")]))
        assert [n.labels for n in d.nodes] == [("a", "b"), ("c",)]
        assert d.label_edges() == [(("a", "b"), ("c",))]

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_closure_reproduces_order(self, n):
        s = make_shape([f"x{i}" for i in range(n)])
        for rel in oracles.all_preorder_matrices(n):
            pre = Preorder(s, rel)
            d = hasse_edges(pre)
            idx = {node.mask: i for i, node in enumerate(d.nodes)}
            pairs = [(idx[lo.mask], idx[hi.mask]) for lo, hi in d.edges]
            k = len(d.nodes)
            closed = oracles.closure_fixed_point(k, pairs)
            reps = [node.members[0] for node in d.nodes]
            condensed = tuple(tuple(rel[reps[i]][reps[j]] for j in range(k)) for i in range(k))
            assert closed == condensed
            assert set(pairs) == oracles.covering_pairs(condensed)

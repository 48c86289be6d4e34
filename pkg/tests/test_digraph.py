import pytest
from hypothesis import given, strategies as st

from majcol.digraph import (Digraph, VertexPartition, degeneracy_order,
                            has_odd_dicycle, strong_components,
                            topological_order, underlying_graph)
from majcol.errors import CyclicInput


def cycle(n):
    return Digraph(n, [(i, (i + 1) % n) for i in range(n)])


def digraphs(max_n=10):
    return st.integers(1, max_n).flatmap(
        lambda n: st.builds(
            Digraph, st.just(n),
            st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
                    .filter(lambda a: a[0] != a[1]), max_size=n * (n - 1))))


class TestBasics:
    def test_rejects_loop(self):
        with pytest.raises(ValueError):
            Digraph(2, [(0, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Digraph(2, [(0, 2)])

    def test_degrees(self):
        d = Digraph(3, [(0, 1), (0, 2), (1, 2)])
        assert d.outdeg(0) == 2 and d.indeg(2) == 2
        assert d.out(0) == (1, 2)
        assert d.max_outdeg() == 2 and d.min_outdeg() == 0

    def test_induced_keeps_internal_arcs_only(self):
        d = Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        sub, mp = d.induced([0, 1, 2])
        assert sub.n == 3
        assert sub.arcs == frozenset({(0, 1), (1, 2)})
        assert [mp[i] for i in range(3)] == [0, 1, 2]

    def test_without_arcs(self):
        d = Digraph(3, [(0, 1), (1, 2)])
        assert d.without_arcs([(0, 1)]).arcs == frozenset({(1, 2)})


class TestOrders:
    def test_topological_path(self):
        d = Digraph(3, [(0, 1), (1, 2)])
        order = topological_order(d)
        # every vertex is preceded by its out-neighborhood
        pos = {v: i for i, v in enumerate(order)}
        assert all(pos[w] < pos[v] for v in range(3) for w in d.out(v))

    def test_topological_cycle_raises(self):
        with pytest.raises(CyclicInput):
            topological_order(cycle(3))

    @given(digraphs())
    def test_topological_invariant(self, d):
        try:
            order = topological_order(d)
        except CyclicInput:
            return
        pos = {v: i for i, v in enumerate(order)}
        assert all(pos[w] < pos[v] for v in range(d.n) for w in d.out(v))

    def test_scc_path(self):
        d = Digraph(3, [(0, 1), (1, 2)])
        assert [sorted(p) for p in strong_components(d).parts] == [[0], [1], [2]]

    def test_scc_cycle_plus_tail(self):
        d = Digraph(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
        parts = [sorted(p) for p in strong_components(d).parts]
        assert parts == [[0, 1, 2], [3]]

    @given(digraphs())
    def test_scc_condensation_is_topological(self, d):
        parts = strong_components(d).parts
        rank = {}
        for i, p in enumerate(parts):
            for v in p:
                rank[v] = i
        for u, v in d.arcs:
            assert rank[u] <= rank[v]


class TestOddDicycle:
    def test_odd_cycle_found(self):
        found, wit = has_odd_dicycle(cycle(5))
        assert found and len(wit) == 5

    def test_even_cycle_clean(self):
        assert has_odd_dicycle(cycle(6)) == (False, None)

    def test_digon_is_even(self):
        d = Digraph(2, [(0, 1), (1, 0)])
        assert has_odd_dicycle(d) == (False, None)

    def test_witness_is_a_directed_odd_cycle(self):
        d = Digraph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 2)])
        found, wit = has_odd_dicycle(d)
        assert found
        assert len(wit) % 2 == 1
        assert len(set(wit)) == len(wit)
        for i, v in enumerate(wit):
            assert d.has_arc(v, wit[(i + 1) % len(wit)])

    @given(digraphs())
    def test_witness_property(self, d):
        found, wit = has_odd_dicycle(d)
        if found:
            assert len(wit) % 2 == 1
            for i, v in enumerate(wit):
                assert d.has_arc(v, wit[(i + 1) % len(wit)])
        else:
            assert wit is None


class TestPartitionAndMisc:
    def test_partition_rejects_overlap(self):
        with pytest.raises(ValueError):
            VertexPartition(3, (frozenset({0, 1}), frozenset({1, 2})))

    def test_partition_rejects_gap(self):
        with pytest.raises(ValueError):
            VertexPartition(3, (frozenset({0}), frozenset({2})))

    def test_partition_allows_empty_part(self):
        p = VertexPartition.of(2, [0, 1], [])
        assert p.parts[1] == frozenset()

    def test_underlying_graph_merges_digon(self):
        d = Digraph(2, [(0, 1), (1, 0)])
        assert underlying_graph(d).edges == frozenset({(0, 1)})

    def test_degeneracy_of_cycle(self):
        g = underlying_graph(cycle(5))
        order, degen = degeneracy_order(g)
        assert degen == 2 and sorted(order) == list(range(5))

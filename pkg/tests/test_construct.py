from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from majcol.construct import (alpha_majority_dichrom2, color_acyclic_alpha,
                              list_majority2, majority2_no_odd_cycles,
                              majority3_choose, majority3_from_odd_partition,
                              od3_choose, partition_chromatic6,
                              partition_dichromatic)
from majcol.digraph import Digraph, VertexPartition, has_odd_dicycle, \
    underlying_graph
from majcol.errors import (BadPartition, CyclicInput,
                           MonochromaticListOddDicycle, OddDicycle,
                           PrecoloredNonSink, PreconditionViolated)
from majcol.generators import gen_circulant, gen_regular, gen_tournament
from majcol.rng import STREAM_GEN, uniform
from majcol.verify import MajorityParam, verify_majority


def cycle(n):
    return Digraph(n, [(i, (i + 1) % n) for i in range(n)])


def random_digraph(n, density, seed):
    arcs = []
    idx = 0
    for u in range(n):
        for v in range(n):
            if u != v:
                if uniform(seed, STREAM_GEN, 90, idx) < density:
                    arcs.append((u, v))
                idx += 1
    return Digraph(n, arcs)


def strip_odd_dicycles(d):
    while True:
        found, wit = has_odd_dicycle(d)
        if not found:
            return d
        d = d.without_arcs([(wit[0], wit[1])])


class TestColorAcyclic:
    def test_path_third_alpha(self):
        d = Digraph(3, [(0, 1), (1, 2)])
        c = color_acyclic_alpha(d, 3)
        assert verify_majority(d, c, MajorityParam(1, 3)) == []

    def test_cyclic_raises(self):
        with pytest.raises(CyclicInput):
            color_acyclic_alpha(cycle(3), 3)

    def test_precolored_non_sink_raises(self):
        d = Digraph(2, [(0, 1)])
        with pytest.raises(PrecoloredNonSink):
            color_acyclic_alpha(d, 2, {0: 1})

    def test_precoloring_respected(self):
        d = Digraph(3, [(0, 1), (0, 2)])
        c = color_acyclic_alpha(d, 2, {1: 2, 2: 2})
        assert c[1] == 2 and c[2] == 2 and c[0] == 1

    def test_least_frequent_choice(self):
        # 0 sees two 1s and one 2: must pick 2 at k=2
        d = Digraph(4, [(0, 1), (0, 2), (0, 3)])
        c = color_acyclic_alpha(d, 2, {1: 1, 2: 1, 3: 2})
        assert c[0] == 2


class TestMajority2:
    def test_even_cycle(self):
        d = cycle(6)
        c = majority2_no_odd_cycles(d)
        assert verify_majority(d, c) == []

    def test_odd_cycle_rejected_with_witness(self):
        with pytest.raises(OddDicycle) as exc:
            majority2_no_odd_cycles(cycle(5))
        assert len(exc.value.cycle) == 5

    def test_sink_precoloring_respected(self):
        d = Digraph(3, [(0, 2), (1, 2)])
        c = majority2_no_odd_cycles(d, {2: 2})
        assert c[2] == 2 and verify_majority(d, c) == []

    def test_non_sink_precoloring_rejected(self):
        d = Digraph(2, [(0, 1)])
        with pytest.raises(PrecoloredNonSink):
            majority2_no_odd_cycles(d, {0: 1})

    @given(st.integers(0, 400))
    @settings(max_examples=80, deadline=None)
    def test_random_filtered_digraphs(self, seed):
        d = strip_odd_dicycles(random_digraph(9, 0.3, seed))
        c = majority2_no_odd_cycles(d)
        assert verify_majority(d, c) == []
        assert set(c.values()) <= {1, 2}


class TestListMajority2:
    def test_even_cycle_distinct_lists(self):
        d = cycle(4)
        lists = {0: {1, 2}, 1: {2, 3}, 2: {1, 2}, 3: {2, 3}}
        c = list_majority2(d, lists)
        assert verify_majority(d, c) == []
        assert all(c[v] in lists[v] for v in range(4))

    def test_monochromatic_odd_cycle_rejected(self):
        d = cycle(5)
        with pytest.raises(MonochromaticListOddDicycle) as exc:
            list_majority2(d, {v: {1, 2} for v in range(5)})
        assert exc.value.shared_list == frozenset({1, 2})

    def test_odd_cycle_split_lists_ok(self):
        d = cycle(5)
        lists = {0: {1, 2}, 1: {1, 2}, 2: {1, 2}, 3: {1, 2}, 4: {3, 4}}
        c = list_majority2(d, lists)
        assert verify_majority(d, c) == []

    @given(st.integers(0, 200))
    @settings(max_examples=50, deadline=None)
    def test_random_even_digraphs(self, seed):
        d = strip_odd_dicycles(random_digraph(8, 0.3, seed))
        pool = [frozenset({1, 2}), frozenset({2, 3}), frozenset({1, 3})]
        lists = {v: pool[int(uniform(seed, STREAM_GEN, 91, v) * 3) % 3]
                 for v in range(8)}
        c = list_majority2(d, lists)
        assert verify_majority(d, c) == []
        assert all(c[v] in lists[v] for v in range(8))


class TestOddPartition:
    def test_c5_partitioned(self):
        d = cycle(5)
        p = VertexPartition.of(5, [0, 1, 2, 3], [4], [])
        c = majority3_from_odd_partition(d, p)
        assert verify_majority(d, c) == [] and set(c.values()) <= {1, 2, 3}

    def test_bad_part_reported(self):
        d = cycle(3)
        p = VertexPartition.of(3, [0, 1, 2], [], [])
        with pytest.raises(BadPartition) as exc:
            majority3_from_odd_partition(d, p)
        assert exc.value.part_index == 0 and exc.value.cycle is not None

    def test_wrong_part_count(self):
        with pytest.raises(BadPartition):
            majority3_from_odd_partition(cycle(4), VertexPartition.of(4, range(4)))


class TestPartitions:
    def test_chromatic6_parts_have_bipartite_underlying(self):
        d = random_digraph(12, 0.25, seed=3)
        p = partition_chromatic6(d)
        assert len(p.parts) == 3
        for part in p.parts:
            sub, _ = d.induced(part)
            assert not has_odd_dicycle(sub)[0]

    def test_chromatic6_feeds_majority3(self):
        for seed in range(6):
            d = random_digraph(10, 0.4, seed)
            c = majority3_from_odd_partition(d, partition_chromatic6(d))
            assert verify_majority(d, c) == []

    def test_dichromatic_acyclic_single_part(self):
        d = Digraph(4, [(0, 1), (1, 2), (2, 3)])
        p = partition_dichromatic(d, 2)
        assert p is not None and p.parts[0] == frozenset(range(4))

    def test_dichromatic_c3_two_parts(self):
        p = partition_dichromatic(cycle(3), 2)
        assert p == VertexPartition.of(3, [0, 1], [2])

    def test_dichromatic_infeasible_returns_none(self):
        # bidirected K5 needs 5 parts: every 2-subset induces a digon
        arcs = [(u, v) for u in range(5) for v in range(5) if u != v]
        assert partition_dichromatic(Digraph(5, arcs), 3) is None


class TestOd3Choose:
    def test_odd_cycle_choice(self):
        d = cycle(5)
        lists = {v: {1, 2, 3} for v in range(5)}
        c = od3_choose(d, lists)
        for col in set(c.values()):
            members = [v for v in range(5) if c[v] == col]
            sub, _ = d.induced(members)
            assert not has_odd_dicycle(sub)[0]

    def test_regular3_core(self):
        d = gen_regular(12, 3, seed=11)
        lists = {v: {1, 2, 3} for v in range(12)}
        c = od3_choose(d, lists)
        for col in set(c.values()):
            members = [v for v in range(12) if c[v] == col]
            sub, _ = d.induced(members)
            assert not has_odd_dicycle(sub)[0]

    def test_precondition_enforced(self):
        # bidirected K8: in-degrees 7, underlying degree 7, degeneracy 7
        arcs = [(u, v) for u in range(8) for v in range(8) if u != v]
        with pytest.raises(PreconditionViolated):
            od3_choose(Digraph(8, arcs), {v: {1, 2, 3} for v in range(8)})


class TestMajority3Choose:
    def check(self, d, lists):
        c = majority3_choose(d, lists)
        assert verify_majority(d, c) == []
        assert all(c[v] in lists[v] for v in range(d.n))

    def test_outdeg4_circulant(self):
        d = gen_circulant(9, 5)  # out-degree 4
        self.check(d, {v: frozenset({1, 2, 3}) for v in range(9)})

    def test_k7_equal_lists(self):
        d = gen_tournament(7, seed=5)
        self.check(d, {v: frozenset({1, 2, 3}) for v in range(7)})

    def test_k7_unequal_lists(self):
        d = gen_tournament(7, seed=8)
        pool = [frozenset({1, 2, 3}), frozenset({2, 3, 4}),
                frozenset({1, 3, 5})]
        self.check(d, {v: pool[v % 3] for v in range(7)})

    def test_bidirected_k7_digons(self):
        arcs = [(u, v) for u in range(7) for v in range(7) if u != v]
        d = Digraph(7, arcs)
        self.check(d, {v: frozenset({1, 2, 3}) for v in range(7)})

    def test_precondition_enforced(self):
        arcs = [(u, v) for u in range(9) for v in range(9) if u != v]
        with pytest.raises(PreconditionViolated):
            majority3_choose(Digraph(9, arcs),
                             {v: {1, 2, 3} for v in range(9)})

    @given(st.integers(0, 150))
    @settings(max_examples=40, deadline=None)
    def test_random_bounded_outdeg(self, seed):
        base = random_digraph(10, 0.35, seed)
        arcs = set()
        for v in range(10):
            arcs.update((v, w) for w in base.out(v)[:4])
        d = Digraph(10, arcs)
        pool = list(combinations(range(1, 6), 3))
        lists = {v: frozenset(pool[int(
            uniform(seed, STREAM_GEN, 92, v) * len(pool)) % len(pool)])
            for v in range(10)}
        self.check(d, lists)


class TestAlphaMajority:
    def test_acyclic_single_part(self):
        d = Digraph(4, [(0, 1), (0, 2), (0, 3)])
        p = VertexPartition.of(4, range(4), [])
        c = alpha_majority_dichrom2(d, p, 3)
        assert verify_majority(d, c, MajorityParam(1, 3)) == []
        assert set(c.values()) <= {1, 2, 3}

    def test_circulant_tightness_shape(self):
        for k in (2, 3, 4):
            d = gen_circulant(2 * k - 1, k)
            p = partition_dichromatic(d, 2)
            c = alpha_majority_dichrom2(d, p, k)
            assert verify_majority(d, c, MajorityParam(1, k)) == []

    def test_bad_partition_rejected(self):
        d = cycle(4)
        p = VertexPartition.of(4, range(4), [])
        with pytest.raises(BadPartition):
            alpha_majority_dichrom2(d, p, 2)

    @given(st.integers(0, 100), st.integers(2, 4))
    @settings(max_examples=40, deadline=None)
    def test_random_two_part(self, seed, k):
        d = random_digraph(8, 0.3, seed)
        p = partition_dichromatic(d, 2)
        if p is None:
            return
        c = alpha_majority_dichrom2(d, p, k)
        assert verify_majority(d, c, MajorityParam(1, k)) == []
        assert len(set(c.values())) <= 2 * k - 1

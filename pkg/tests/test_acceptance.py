"""Acceptance gate: one test per criterion, one printed pass/fail line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines.
"""

import time
from itertools import combinations, permutations

import pytest

from majcol.construct import (alpha_majority_dichrom2, majority2_no_odd_cycles,
                              majority3_choose, partition_dichromatic)
from majcol.digraph import Digraph, has_odd_dicycle
from majcol.exact import (exact_fractional_weight, exact_majority_colorable,
                          hyp2col_exact)
from majcol.fractional import (binomial_tail_check, case_lower_bounds,
                               estimate_highdeg_inclusion,
                               estimate_nonpopular_inclusion,
                               highdeg_probability, sample_X_4c)
from majcol.generators import gen_circulant, gen_regular
from majcol.hardness import (HypergraphInstance, check_d9_observation,
                             reduce_hypergraph)
from majcol.rng import STREAM_GEN, uniform
from majcol.verify import MajorityParam, is_stable, verify_majority

BOUND = 0.252513


def report(num: int, ok: bool, detail: str) -> None:
    print(f"criterion {num}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {num}: {detail}"


def random_digraph(n, density, seed, tag):
    arcs = []
    idx = 0
    for u in range(n):
        for v in range(n):
            if u != v:
                if uniform(seed, STREAM_GEN, tag, idx) < density:
                    arcs.append((u, v))
                idx += 1
    return Digraph(n, arcs)


def strip_odd_dicycles(d):
    while True:
        found, wit = has_odd_dicycle(d)
        if not found:
            return d
        d = d.without_arcs([(wit[0], wit[1])])


def test_criterion_1_gadget_exactness():
    t0 = time.time()
    ok = check_d9_observation()
    elapsed = time.time() - t0
    report(1, ok and elapsed < 1.0,
           f"all 8 precolorings decided in {elapsed:.3f}s")


def test_criterion_2_reduction_equivalence():
    t0 = time.time()
    checked = 0
    for n in range(3, 6):
        triples = list(combinations(range(n), 3))
        perms = list(permutations(range(n)))
        seen = set()
        for m in range(0, 4):
            for es in combinations(triples, m):
                canon = min(tuple(sorted(tuple(sorted(pi[v] for v in e))
                                         for e in es)) for pi in perms)
                if canon in seen:
                    continue
                seen.add(canon)
                h = HypergraphInstance.of(n, es)
                d, _ = reduce_hypergraph(h)
                via_digraph = exact_majority_colorable(
                    d, 2, max_vertices=25) is not None
                via_hypergraph = hyp2col_exact(h) is not None
                if via_digraph != via_hypergraph:
                    report(2, False, f"mismatch at n={n}, edges={es}")
                checked += 1
    elapsed = time.time() - t0
    report(2, elapsed < 300,
           f"{checked} isomorphism classes agree in {elapsed:.2f}s")


def test_criterion_3_odd_cycle_2colorability():
    cross_checked = 0
    for i in range(500):
        n = 4 + i % 9  # 4..12
        d = strip_odd_dicycles(random_digraph(n, 0.3, i, 300))
        sinks = [v for v in range(n) if d.outdeg(v) == 0]
        pre = {v: 1 + int(uniform(i, STREAM_GEN, 301, v) * 2) % 2
               for v in sinks}
        c = majority2_no_odd_cycles(d, pre)
        if verify_majority(d, c) or any(c[v] != pre[v] for v in sinks):
            report(3, False, f"instance {i} failed")
        if n <= 8:
            oracle = exact_majority_colorable(d, 2)
            if oracle is None:
                report(3, False, f"oracle disagrees at instance {i}")
            cross_checked += 1
    report(3, True, f"500/500 valid, {cross_checked} oracle cross-checks")


def test_criterion_4_majority3_constructors():
    pool = list(combinations(range(1, 6), 3))

    def rand_lists(n, seed, tag):
        return {v: frozenset(pool[int(
            uniform(seed, STREAM_GEN, tag, v) * len(pool)) % len(pool)])
            for v in range(n)}

    for i in range(500):
        n = 8 + i % 23
        base = random_digraph(n, 0.3, i, 400)
        arcs = set()
        for v in range(n):  # trim to max out-degree 4
            arcs.update((v, w) for w in base.out(v)[:4])
        d = Digraph(n, arcs)
        lists = rand_lists(n, i, 401)
        c = majority3_choose(d, lists)
        if verify_majority(d, c) or any(c[v] not in lists[v] for v in range(n)):
            report(4, False, f"bounded-degree instance {i} failed")
    for i in range(200):
        n = 8 + i % 23
        d = gen_regular(n, 3, seed=4000 + i)
        lists = rand_lists(n, i, 402)
        c = majority3_choose(d, lists)
        if verify_majority(d, c) or any(c[v] not in lists[v] for v in range(n)):
            report(4, False, f"3-regular instance {i} failed")
    report(4, True, "500 bounded-degree + 200 3-regular instances all valid")


def test_criterion_5_fractional_constants():
    values, vmin = case_lower_bounds()
    ok = abs(vmin - BOUND) <= 1e-6 and 1.0 / vmin < 3.9602
    report(5, ok, f"min {vmin:.6f}, reciprocal {1.0 / vmin:.6f}")


def test_criterion_6_binomial_proposition():
    tails, dominated = binomial_tail_check(0.4594, 41)
    p = 0.4594
    ok = dominated and abs(tails[3] - (3 * p ** 2 - 2 * p ** 3)) <= 1e-6
    report(6, ok, f"k=3 tail {tails[3]:.6f}, dominance over k<=41 holds")


def _mixed_degree_50():
    n = 50
    arcs = set()
    for v in range(n):
        deg = 1 if v < 10 else v % 5
        picked = 0
        i = 0
        while picked < deg:
            w = int(uniform(77, STREAM_GEN, 50, v * 97 + i) * n) % n
            i += 1
            if w != v and (v, w) not in arcs:
                arcs.add((v, w))
                picked += 1
    return Digraph(n, arcs)


def test_criterion_7_sampler_soundness():
    t0 = time.time()
    d = _mixed_degree_50()
    for t in range(100000):
        _, stable = sample_X_4c(d, seed=0, trial=t)
        if not is_stable(d, stable):
            report(7, False, f"unstable sample at trial {t}")
    freq, se = estimate_nonpopular_inclusion(d, trials=100000, seed=0)
    low = [v for v in range(d.n) if freq[v] < BOUND - 3 * se[v]]
    elapsed = time.time() - t0
    report(7, not low and elapsed < 120,
           f"all samples stable, min freq {min(freq):.5f} over 10^5 trials "
           f"in {elapsed:.1f}s")


def test_criterion_8_exact_lp():
    cases = [
        (Digraph(3, [(0, 1), (1, 2), (2, 0)]), 3.0),
        (Digraph(1), 1.0),
        (Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]), 2.0),
    ]
    for d, expected in cases:
        value, fc, duals = exact_fractional_weight(d)
        if abs(value - expected) > 1e-7 or abs(sum(duals) - value) > 1e-7:
            report(8, False, f"n={d.n}: got {value}, expected {expected}")
    report(8, True, "C3 -> 3.0, K1 -> 1.0, C4 -> 2.0 with zero duality gap")


def test_criterion_9_alpha_tightness():
    t0 = time.time()
    for k in (2, 3, 4):
        d = gen_circulant(2 * k - 1, k)
        partition = partition_dichromatic(d, 2)
        if partition is None:
            report(9, False, f"k={k}: no 2-part acyclic partition found")
        c = alpha_majority_dichrom2(d, partition, k)
        if verify_majority(d, c, MajorityParam(1, k)):
            report(9, False, f"k={k}: coloring invalid")
        if len(set(c.values())) != 2 * k - 1:
            report(9, False, f"k={k}: colors not pairwise distinct")
        if k <= 3:
            fewer = exact_majority_colorable(d, 2 * k - 2, MajorityParam(1, k))
            if fewer is not None:
                report(9, False, f"k={k}: {2 * k - 2} colors suffice")
    elapsed = time.time() - t0
    report(9, elapsed < 60,
           f"k in {{2,3,4}} rainbow-valid, 2k-2 infeasible for k<=3 "
           f"in {elapsed:.2f}s")


def test_criterion_10_highdeg_sampler():
    n = 200
    d = Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v])
    freq, se = estimate_highdeg_inclusion(d, 199, trials=100000, seed=0)
    p = highdeg_probability(199)
    q = 199.0 ** -2
    low = [v for v in range(n) if freq[v] < p - q - 3 * se[v]]
    report(10, not low,
           f"min freq {min(freq):.5f} >= p - q - 3*stderr with p {p:.5f}")

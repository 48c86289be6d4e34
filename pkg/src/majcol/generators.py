"""Deterministic instance generators for the CLI and the test suites."""

from __future__ import annotations

from .digraph import Digraph
from .errors import GenerationFailed, ParamOutOfRange
from .rng import STREAM_GEN, uniform


def gen_circulant(n: int, k: int) -> Digraph:
    """Circulant digraph on Z_n with arc (i, j) iff (j - i) mod n in 1..k-1."""
    if k < 2 or k > n:
        raise ParamOutOfRange("need 2 <= k <= n")
    arcs = [(i, (i + delta) % n) for i in range(n) for delta in range(1, k)]
    return Digraph(n, arcs)


def gen_tournament(n: int, seed: int) -> Digraph:
    """Random orientation of each vertex pair."""
    arcs = []
    idx = 0
    for u in range(n):
        for v in range(u + 1, n):
            if uniform(seed, STREAM_GEN, 0, idx) < 0.5:
                arcs.append((u, v))
            else:
                arcs.append((v, u))
            idx += 1
    return Digraph(n, arcs)


def _random_derangement(n: int, seed: int, attempt: int) -> list[int]:
    """Fisher-Yates shuffle; caller rejects fixed points."""
    perm = list(range(n))
    for i in range(n - 1, 0, -1):
        j = int(uniform(seed, STREAM_GEN, attempt, i) * (i + 1))
        j = min(j, i)
        perm[i], perm[j] = perm[j], perm[i]
    return perm


def gen_regular(n: int, r: int, seed: int, max_attempts: int = 2000) -> Digraph:
    """r-in/r-out-regular digraph as a union of r loop-free permutations.

    Digons are allowed; a permutation is resampled when it would create a
    fixed point or a parallel duplicate of an existing arc.
    """
    if not (0 < r < n):
        raise ParamOutOfRange("need 0 < r < n")
    arcs: set[tuple[int, int]] = set()
    layers = 0
    attempt = 0
    while layers < r:
        if attempt >= max_attempts:
            raise GenerationFailed(
                f"could not place {r} disjoint derangements in {max_attempts} tries")
        perm = _random_derangement(n, seed, attempt)
        attempt += 1
        new = [(i, perm[i]) for i in range(n)]
        if any(i == p for i, p in new) or any(a in arcs for a in new):
            continue
        arcs.update(new)
        layers += 1
    return Digraph(n, arcs)


def gen_gnp(n: int, p: float, seed: int) -> Digraph:
    """Each ordered pair (u, v), u != v, becomes an arc with probability p."""
    if not (0.0 <= p <= 1.0):
        raise ParamOutOfRange("need 0 <= p <= 1")
    arcs = []
    idx = 0
    for u in range(n):
        for v in range(n):
            if u != v:
                if uniform(seed, STREAM_GEN, 1, idx) < p:
                    arcs.append((u, v))
                idx += 1
    return Digraph(n, arcs)

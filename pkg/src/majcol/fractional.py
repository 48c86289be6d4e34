"""Randomized stable-set construction and the fractional majority coloring LP.

Two samplers produce stable sets: the two-probability sampler with its red
(out-degree 1) vertex alteration, and the single-probability sampler for
digraphs of large minimum out-degree.  Both remove popular vertices at the
end, so every sample is stable by construction.  A covering LP over a
sampled family turns empirical inclusion rates into a feasible fractional
coloring.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .digraph import Digraph
from .errors import CoverageFailure, DegreeTooLow, ParamOutOfRange
from .exact import solve_cover_lp
from .rng import STREAM_CYCLE, STREAM_INDICATOR, uniform, uniform_block
from .verify import FractionalColoring


@dataclass(frozen=True)
class SamplerParams:
    """Inclusion probabilities: p1 for out-degree-1 vertices, p2 otherwise."""

    p1: float = 0.4594
    p2: float = 0.4503

    def __post_init__(self):
        if not (0.0 < self.p1 < 1.0 and 0.0 < self.p2 < 1.0):
            raise ParamOutOfRange("probabilities must lie strictly in (0, 1)")


def case_lower_bounds(params: SamplerParams = SamplerParams()
                      ) -> tuple[dict[str, float], float]:
    """Closed-form lower bounds on Pr(v in X and v not popular in X).

    Four cases cover the possible out-neighborhood shapes of an
    out-degree-1 vertex; the fifth value bounds all other vertices via the
    worst binomial tail (out-degree 3).  Returns the named values and their
    minimum.
    """
    p1, p2 = params.p1, params.p2
    values = {
        "case1": p1 * (1 - p2),
        "case2": p1 * (1 - p1) + p1 ** 2 * p2,
        "case3": p1 * (1 - p1) + p1 ** 3 * (1 - p1),
        "case4": p1 * (1 - p1) + p1 ** 3 / 3.0,
        "blue": p2 * (1 - 3 * p1 ** 2 + 2 * p1 ** 3),
    }
    return values, min(values.values())


def binomial_tail_check(p1: float, k_max: int
                        ) -> tuple[list[float], bool]:
    """Exact tails Pr(B(k, p1) > k/2) for k = 0..k_max.

    The boolean confirms that the k = 3 tail dominates every k != 1 and
    that the odd-k tails decrease strictly from k = 3 on.
    """
    if not (0.0 < p1 < 0.5):
        raise ParamOutOfRange("need 0 < p1 < 1/2")
    if not (3 <= k_max <= 60):
        raise ParamOutOfRange("need 3 <= k_max <= 60")
    q = 1.0 - p1
    tails = []
    for k in range(k_max + 1):
        terms = [math.comb(k, i) * p1 ** i * q ** (k - i)
                 for i in range(k // 2 + 1, k + 1)]
        tails.append(math.fsum(terms))
    peak = tails[3]
    dominated = all(tails[k] <= peak + 1e-15
                    for k in range(k_max + 1) if k != 1)
    odd = [tails[k] for k in range(3, k_max + 1, 2)]
    decreasing = all(a > b for a, b in zip(odd, odd[1:]))
    return tails, dominated and decreasing


def _indicator_row(d: Digraph, params: SamplerParams, seed: int,
                   trial: int) -> np.ndarray:
    u = uniform_block(seed, STREAM_INDICATOR, trial, trial + 1, d.n)[0]
    thresh = np.array([params.p1 if d.outdeg(v) == 1 else params.p2
                       for v in range(d.n)])
    return u < thresh


def _build_x_4c(d: Digraph, params: SamplerParams, seed: int, trial: int,
                indicated: Optional[np.ndarray] = None) -> set[int]:
    """The sampled set X of the two-probability construction."""
    if indicated is None:
        indicated = _indicator_row(d, params, seed, trial)
    x: set[int] = set()
    reds: set[int] = set()
    for v in range(d.n):
        if not indicated[v]:
            continue
        if d.outdeg(v) == 1:
            reds.add(v)
        else:
            x.add(v)

    # indicated red vertices form a functional graph; its cycles are
    # vertex-disjoint, and one uniformly random vertex per cycle is dropped
    succ = {v: d.out(v)[0] for v in reds}
    state: dict[int, int] = {}  # 0 in progress, 1 done
    cycles: list[list[int]] = []
    for start in sorted(reds):
        if start in state:
            continue
        path = []
        v = start
        while v in succ and v not in state:
            state[v] = 0
            path.append(v)
            v = succ[v]
        if v in succ and state.get(v) == 0:  # closed a new cycle at v
            cyc = path[path.index(v):]
            cycles.append(cyc)
        for u in path:
            state[u] = 1
    cycles.sort(key=min)
    for ci, cyc in enumerate(cycles):
        start = min(cyc)
        canon = []
        v = start
        for _ in cyc:
            canon.append(v)
            v = succ[v]
        u = uniform(seed, STREAM_CYCLE, trial, ci)
        victim = canon[min(int(u * len(canon)), len(canon) - 1)]
        reds.discard(victim)

    # remaining reds are acyclic; add each after its out-neighbor is decided
    depth: dict[int, int] = {}

    def get_depth(v: int) -> int:
        chain = []
        while v in reds and v not in depth:
            chain.append(v)
            v = succ[v]
        base = depth[v] if v in reds else 0
        for u in reversed(chain):
            base += 1
            depth[u] = base
        return depth[chain[0]] if chain else base

    for v in reds:
        get_depth(v)
    for v in sorted(reds, key=lambda v: (depth[v], v)):
        if succ[v] not in x:
            x.add(v)
    return x


def _popular_in(d: Digraph, x: set[int]) -> set[int]:
    return {v for v in x
            if 2 * sum(1 for w in d.out(v) if w in x) > d.outdeg(v)}


def sample_X_4c(d: Digraph, params: SamplerParams = SamplerParams(),
                seed: int = 0, trial: int = 0
                ) -> tuple[set[int], set[int]]:
    """One draw of (X, X minus its popular vertices); the latter is stable."""
    x = _build_x_4c(d, params, seed, trial)
    return x, x - _popular_in(d, x)


def estimate_nonpopular_inclusion(d: Digraph,
                                  params: SamplerParams = SamplerParams(),
                                  trials: int = 10_000, seed: int = 0,
                                  trial_offset: int = 0
                                  ) -> tuple[list[float], list[float]]:
    """Monte-Carlo Pr(v in X and v not popular in X) with standard errors.

    Counts are keyed by absolute trial index, so splitting a run into
    [offset, offset + trials) windows across workers and summing counts
    reproduces the serial result exactly.
    """
    if trials < 1:
        raise ParamOutOfRange("trials must be >= 1")
    counts = np.zeros(d.n, dtype=np.int64)
    thresh = np.array([params.p1 if d.outdeg(v) == 1 else params.p2
                       for v in range(d.n)])
    batch = 4096
    lo = trial_offset
    while lo < trial_offset + trials:
        hi = min(lo + batch, trial_offset + trials)
        u = uniform_block(seed, STREAM_INDICATOR, lo, hi, d.n)
        ind = u < thresh
        for t in range(lo, hi):
            x = _build_x_4c(d, params, seed, t, ind[t - lo])
            good = x - _popular_in(d, x)
            for v in good:
                counts[v] += 1
        lo = hi
    freq = counts / trials
    stderr = np.sqrt(np.maximum(freq * (1 - freq), 0.0) / trials)
    return freq.tolist(), stderr.tolist()


def highdeg_probability(n_min: int) -> float:
    return 0.5 - math.sqrt(math.log(n_min) / n_min)


def sample_X_highdeg(d: Digraph, n_min: int, seed: int = 0,
                     trial: int = 0) -> set[int]:
    """Stable set from uniform inclusion at p = 1/2 - sqrt(ln N / N)."""
    if n_min < 3:
        raise ParamOutOfRange("need N >= 3")
    p = highdeg_probability(n_min)
    if p <= 0.0:
        raise ParamOutOfRange(f"inclusion probability {p:.4f} <= 0 at N={n_min}")
    if d.min_outdeg() < n_min:
        raise DegreeTooLow(
            f"minimum out-degree {d.min_outdeg()} below N={n_min}")
    u = uniform_block(seed, STREAM_INDICATOR, trial, trial + 1, d.n)[0]
    x = {v for v in range(d.n) if u[v] < p}
    return x - _popular_in(d, x)


def estimate_highdeg_inclusion(d: Digraph, n_min: int, trials: int = 10_000,
                               seed: int = 0, trial_offset: int = 0
                               ) -> tuple[list[float], list[float]]:
    """Per-vertex frequency of 'in X and not popular in X' for the
    single-probability sampler; vectorized over trials."""
    if trials < 1:
        raise ParamOutOfRange("trials must be >= 1")
    if n_min < 3:
        raise ParamOutOfRange("need N >= 3")
    p = highdeg_probability(n_min)
    if p <= 0.0:
        raise ParamOutOfRange(f"inclusion probability {p:.4f} <= 0 at N={n_min}")
    if d.min_outdeg() < n_min:
        raise DegreeTooLow(
            f"minimum out-degree {d.min_outdeg()} below N={n_min}")
    adj = np.zeros((d.n, d.n), dtype=np.float32)
    for u, v in d.arcs:
        adj[u, v] = 1.0
    outdeg = np.array([d.outdeg(v) for v in range(d.n)])
    counts = np.zeros(d.n, dtype=np.int64)
    batch = 8192
    lo = trial_offset
    while lo < trial_offset + trials:
        hi = min(lo + batch, trial_offset + trials)
        u = uniform_block(seed, STREAM_INDICATOR, lo, hi, d.n)
        x = (u < p)
        inside = x.astype(np.float32) @ adj.T  # [t, v] = |N+(v) & X_t|
        popular = x & (2 * inside > outdeg)
        counts += (x & ~popular).sum(axis=0)
        lo = hi
    freq = counts / trials
    stderr = np.sqrt(np.maximum(freq * (1 - freq), 0.0) / trials)
    return freq.tolist(), stderr.tolist()


def fractional_from_samples(d: Digraph, sampler: str = "4c",
                            batch: int = 64, seed: int = 0,
                            params: SamplerParams = SamplerParams(),
                            n_min: Optional[int] = None,
                            max_doublings: int = 8
                            ) -> tuple[FractionalColoring, float]:
    """Feasible fractional majority coloring from sampled stable sets.

    Collects `batch` samples (doubling on incomplete coverage, up to
    `max_doublings` times) and solves the covering LP restricted to the
    sampled family.  Returns the coloring and its total weight, which can
    only exceed the unrestricted optimum.
    """
    if batch < 1:
        raise ParamOutOfRange("batch must be >= 1")
    if sampler not in ("4c", "highdeg"):
        raise ParamOutOfRange(f"unknown sampler {sampler!r}")
    if sampler == "highdeg" and n_min is None:
        raise ParamOutOfRange("highdeg sampler requires n_min")

    family: set[frozenset[int]] = set()
    covered: set[int] = set()
    target = batch
    trial = 0
    doublings = 0
    while True:
        while trial < target:
            if sampler == "4c":
                _, stable = sample_X_4c(d, params, seed, trial)
            else:
                stable = sample_X_highdeg(d, n_min, seed, trial)
            if stable:
                family.add(frozenset(stable))
                covered |= stable
            trial += 1
        if covered == set(range(d.n)):
            break
        if doublings >= max_doublings:
            missing = sorted(set(range(d.n)) - covered)
            raise CoverageFailure(
                f"vertices {missing} never sampled after {trial} trials")
        doublings += 1
        target *= 2
    value, fc, _ = solve_cover_lp(d, sorted(family, key=lambda s: (len(s), sorted(s))))
    return fc, value

"""Brute-force ground truth at desk scale.

Exact (list-)majority colorability by pruned backtracking, stable-set
enumeration, the exact fractional-weight LP with its packing dual, and
exact 2-colorability of 3-uniform hypergraphs.  Everything here is the
oracle side of a dual-route check: slow, simple, and trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .digraph import Digraph, has_odd_dicycle
from .errors import InstanceTooLarge
from .simplex import simplex_maximize
from .verify import (HALF, FractionalColoring, MajorityParam, verify_fractional,
                     verify_fractional_exact, verify_majority)

ListAssignment = Mapping[int, frozenset[int]]


@dataclass(frozen=True)
class StableSetFamily:
    """All stable sets of one digraph, sorted by (size, elements)."""

    sets: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __contains__(self, s) -> bool:
        return frozenset(s) in set(self.sets)


def _default_cap(k: int) -> int:
    if k <= 2:
        return 24
    if k == 3:
        return 14
    return 12


def _backtrack_majority(d: Digraph, lists: Sequence[Sequence[int]],
                        alpha: MajorityParam,
                        symmetry: bool) -> Optional[dict[int, int]]:
    """Vertices in input order, colors ascending, incremental same-color counts."""
    n = d.n
    a, b = alpha.a, alpha.b
    budget = [a * d.outdeg(v) // b for v in range(n)]  # max same-colored allowed
    colors: list[Optional[int]] = [None] * n
    same = [0] * n  # same-colored out-neighbors among already-colored

    def place(v: int, col: int) -> bool:
        cnt = sum(1 for w in d.out(v) if colors[w] == col)
        if cnt > budget[v]:
            return False
        touched = []
        for u in d.inn(v):
            if colors[u] == col:
                same[u] += 1
                touched.append(u)
                if same[u] > budget[u]:
                    for t in touched:
                        same[t] -= 1
                    return False
        colors[v] = col
        same[v] = cnt
        return True

    def unplace(v: int, col: int) -> None:
        for u in d.inn(v):
            if colors[u] == col:
                same[u] -= 1
        colors[v] = None
        same[v] = 0

    def rec(i: int, max_used: int) -> bool:
        if i == n:
            return True
        options = lists[i]
        for col in options:
            if symmetry and col > max_used + 1:
                break  # colors are interchangeable: skip unused-color symmetry
            if place(i, col):
                if rec(i + 1, max(max_used, col) if symmetry else max_used):
                    return True
                unplace(i, col)
        return False

    if rec(0, 0):
        return {v: colors[v] for v in range(n)}
    return None


def exact_majority_colorable(d: Digraph, k: int,
                             alpha: MajorityParam = HALF,
                             max_vertices: Optional[int] = None
                             ) -> Optional[dict[int, int]]:
    """A valid alpha-majority k-coloring, or None if there is none."""
    cap = max_vertices if max_vertices is not None else _default_cap(k)
    if d.n > cap:
        raise InstanceTooLarge(f"n={d.n} exceeds cap {cap} for k={k}")
    lists = [range(1, k + 1)] * d.n
    result = _backtrack_majority(d, lists, alpha, symmetry=True)
    if result is not None:
        assert not verify_majority(d, result, alpha)
    return result


def exact_list_majority(d: Digraph, lists: ListAssignment,
                        alpha: MajorityParam = HALF,
                        max_vertices: Optional[int] = None
                        ) -> Optional[dict[int, int]]:
    """A valid alpha-majority coloring with c(v) in L(v), or None."""
    sizes = [len(lists[v]) for v in range(d.n)]
    k = max(sizes, default=1)
    cap = max_vertices if max_vertices is not None else _default_cap(k)
    if d.n > cap:
        raise InstanceTooLarge(f"n={d.n} exceeds cap {cap}")
    ordered = [sorted(lists[v]) for v in range(d.n)]
    result = _backtrack_majority(d, ordered, alpha, symmetry=False)
    if result is not None:
        assert not verify_majority(d, result, alpha)
    return result


def exact_od3_choice(d: Digraph, lists: ListAssignment,
                     max_vertices: int = 16) -> Optional[dict[int, int]]:
    """A list choice with no monochromatic odd directed cycle, or None.

    Exhaustive over the product of the lists, pruning as soon as some color
    class among the already-chosen vertices carries an odd directed cycle.
    """
    n = d.n
    if n > max_vertices:
        raise InstanceTooLarge(f"n={n} exceeds cap {max_vertices}")
    ordered = [sorted(lists[v]) for v in range(n)]
    choice: dict[int, int] = {}

    def mono_odd_cycle(col: int) -> bool:
        members = [v for v, c in choice.items() if c == col]
        sub, _ = d.induced(members)
        return has_odd_dicycle(sub)[0]

    def rec(i: int) -> bool:
        if i == n:
            return True
        for col in ordered[i]:
            choice[i] = col
            if not mono_odd_cycle(col) and rec(i + 1):
                return True
            del choice[i]
        return False

    if rec(0):
        return dict(choice)
    return None


def enumerate_stable_sets(d: Digraph, max_vertices: int = 20) -> StableSetFamily:
    """Exactly all stable subsets of V(D).

    Include/exclude recursion; a branch dies as soon as some included vertex
    already has strictly more than half its out-neighbors included, since
    popularity is monotone under adding vertices.
    """
    n = d.n
    if n > max_vertices:
        raise InstanceTooLarge(f"n={n} exceeds cap {max_vertices}")
    found: list[frozenset[int]] = []
    current: list[int] = []
    inside = [False] * n
    cnt = [0] * n  # |N+(v) & S| for v in S

    def rec(i: int) -> None:
        if i == n:
            found.append(frozenset(current))
            return
        rec(i + 1)  # exclude i
        # include i
        my = sum(1 for w in d.out(i) if inside[w])
        if 2 * my > d.outdeg(i):
            return
        bumped = []
        ok = True
        for u in d.inn(i):
            if inside[u]:
                cnt[u] += 1
                bumped.append(u)
                if 2 * cnt[u] > d.outdeg(u):
                    ok = False
                    break
        if ok:
            inside[i] = True
            cnt[i] = my
            current.append(i)
            rec(i + 1)
            current.pop()
            inside[i] = False
            cnt[i] = 0
        for u in bumped:
            cnt[u] -= 1

    rec(0)
    found.sort(key=lambda s: (len(s), sorted(s)))
    return StableSetFamily(tuple(found))


def _maximal_sets(sets: Sequence[frozenset[int]]) -> list[frozenset[int]]:
    by_size = sorted(sets, key=len, reverse=True)
    maximal: list[frozenset[int]] = []
    for s in by_size:
        if not any(s < t for t in maximal):
            maximal.append(s)
    return maximal


def solve_cover_lp(d: Digraph, family: Sequence[frozenset[int]],
                   tol: float = 1e-7
                   ) -> tuple[float, FractionalColoring, list[float]]:
    """Minimum-weight fractional cover of V(D) by the given stable sets.

    Solves the packing dual max sum(y_v) s.t. sum_{v in T} y_v <= 1 over the
    inclusion-maximal members of the family (dominated constraints are
    redundant), then reads the covering weights off the dual multipliers.
    The covering solution is re-verified in exact rational arithmetic.
    """
    n = d.n
    if n == 0:
        return 0.0, FractionalColoring(()), []
    sets = _maximal_sets([s for s in family if s])
    covered = set().union(*sets) if sets else set()
    if covered != set(range(n)):
        missing = sorted(set(range(n)) - covered)
        raise ValueError(f"family does not cover vertices {missing}")
    a = [[1.0 if v in s else 0.0 for v in range(n)] for s in sets]
    b = [1.0] * len(sets)
    c = [1.0] * n
    dual_value, y, w = simplex_maximize(a, b, c)
    entries = [(sets[i], float(w[i])) for i in range(len(sets)) if w[i] > tol]
    primal_value = sum(wt for _, wt in entries)
    if abs(primal_value - dual_value) > tol:
        raise ArithmeticError(
            f"primal {primal_value} and dual {dual_value} disagree beyond {tol}")
    # exact rational re-verification of the covering solution
    rational = [(s, Fraction(wt).limit_denominator(10 ** 9)) for s, wt in entries]
    ok, reason = verify_fractional_exact(d, rational)
    if not ok:
        raise ArithmeticError(f"rational re-verification failed: {reason}")
    fc = FractionalColoring(tuple(entries))
    ok, reason = verify_fractional(d, fc)
    assert ok, reason
    return primal_value, fc, [float(val) for val in y]


def exact_fractional_weight(d: Digraph, max_vertices: int = 20
                            ) -> tuple[float, FractionalColoring, list[float]]:
    """Optimal fractional majority coloring weight with primal and dual.

    Returns (optimal value, covering FractionalColoring, dual vertex
    weights); the dual certifies optimality by LP duality.
    """
    family = enumerate_stable_sets(d, max_vertices=max_vertices)
    return solve_cover_lp(d, list(family))


def hyp2col_exact(h, max_vertices: int = 24) -> Optional[dict[int, int]]:
    """A 2-coloring of a 3-uniform hypergraph with no monochromatic edge."""
    n = h.n
    if n > max_vertices:
        raise InstanceTooLarge(f"n={n} exceeds cap {max_vertices}")
    edges = [tuple(sorted(e)) for e in h.edges]
    # edges whose largest vertex is v can be checked once v is colored
    closing: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
    for e in edges:
        closing[e[2]].append(e)
    colors: list[int] = [0] * n

    def rec(i: int) -> bool:
        if i == n:
            return True
        for col in (1, 2):
            colors[i] = col
            if all(not (colors[a] == colors[b] == colors[c])
                   for a, b, c in closing[i]) and rec(i + 1):
                return True
        colors[i] = 0
        return False

    if rec(0):
        return {v: colors[v] for v in range(n)}
    return None

"""Digraph representation and structural primitives.

Digraphs are loopless and simple (each ordered pair at most once) but may
contain digons, i.e. anti-parallel arc pairs.  Vertices are the dense
integers 0..n-1.  All types are immutable after construction and every
operation here is a pure function, so instances can be shared freely.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import CyclicInput


class Digraph:
    """Immutable directed graph on vertices 0..n-1."""

    __slots__ = ("n", "arcs", "_out", "_in")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        arcset = frozenset((int(u), int(v)) for u, v in arcs)
        for u, v in arcset:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u},{v}) out of range for n={n}")
        self.n = n
        self.arcs = arcset
        out: list[list[int]] = [[] for _ in range(n)]
        inn: list[list[int]] = [[] for _ in range(n)]
        for u, v in arcset:
            out[u].append(v)
            inn[v].append(u)
        # sorted adjacency keeps every traversal deterministic
        self._out = tuple(tuple(sorted(a)) for a in out)
        self._in = tuple(tuple(sorted(a)) for a in inn)

    def out(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def inn(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def outdeg(self, v: int) -> int:
        return len(self._out[v])

    def indeg(self, v: int) -> int:
        return len(self._in[v])

    def vertices(self) -> range:
        return range(self.n)

    def max_outdeg(self) -> int:
        return max((len(a) for a in self._out), default=0)

    def min_outdeg(self) -> int:
        return min((len(a) for a in self._out), default=0)

    def max_total_deg(self) -> int:
        return max((self.outdeg(v) + self.indeg(v) for v in range(self.n)), default=0)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def induced(self, vertices: Iterable[int]) -> tuple["Digraph", list[int]]:
        """Induced subdigraph plus the sorted list mapping new ids to old."""
        old = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(old)}
        arcs = [(pos[u], pos[v]) for u, v in self.arcs if u in pos and v in pos]
        return Digraph(len(old), arcs), old

    def without_arcs(self, drop: Iterable[tuple[int, int]]) -> "Digraph":
        return Digraph(self.n, self.arcs - set(drop))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self.arcs == other.arcs
        )

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={sorted(self.arcs)})"


class UndirectedGraph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        norm = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            norm.add((min(u, v), max(u, v)))
        self.n = n
        self.edges = frozenset(norm)
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(a)) for a in adj)

    def adj(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, UndirectedGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"UndirectedGraph(n={self.n}, edges={sorted(self.edges)})"


@dataclass(frozen=True)
class VertexPartition:
    """Pairwise disjoint vertex sets whose union is exactly 0..n-1.

    Empty parts are allowed (padding a 2-part partition to 3 parts, say).
    """

    n: int
    parts: tuple[frozenset[int], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for part in self.parts:
            if part & seen:
                raise ValueError("partition parts overlap")
            seen |= part
        if seen != set(range(self.n)):
            raise ValueError("partition does not cover 0..n-1 exactly")

    @staticmethod
    def of(n: int, *parts: Iterable[int]) -> "VertexPartition":
        return VertexPartition(n, tuple(frozenset(p) for p in parts))

    def part_of(self, v: int) -> int:
        for i, part in enumerate(self.parts):
            if v in part:
                return i
        raise KeyError(v)


def underlying_graph(d: Digraph) -> UndirectedGraph:
    """The simple undirected graph U(D); a digon collapses to one edge."""
    return UndirectedGraph(d.n, ((u, v) for u, v in d.arcs))


def strong_components(d: Digraph) -> VertexPartition:
    """Strongly connected components in condensation order.

    The returned parts are topologically ordered: every arc between two
    distinct components goes from an earlier part to a later part.
    """
    n = d.n
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[frozenset[int]] = []
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        # iterative Tarjan; work items are (vertex, next-child position)
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            out = d.out(v)
            while pi < len(out):
                w = out[pi]
                pi += 1
                if index[w] == -1:
                    work[-1] = (v, pi)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(frozenset(comp))
            if work:
                u, _ = work[-1]
                low[u] = min(low[u], low[v])

    # Tarjan emits components in reverse topological order
    comps.reverse()
    return VertexPartition(n, tuple(comps))


def topological_order(d: Digraph) -> list[int]:
    """Order in which every vertex is preceded by its out-neighborhood.

    Equivalently: for every arc (x_i, x_j) with positions i, j in the
    returned sequence, i > j.  Deterministic: among available vertices the
    smallest id goes first.
    """
    outdeg = [d.outdeg(v) for v in range(d.n)]
    ready = [v for v in range(d.n) if outdeg[v] == 0]
    heapq.heapify(ready)
    order: list[int] = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for u in d.inn(v):
            outdeg[u] -= 1
            if outdeg[u] == 0:
                heapq.heappush(ready, u)
    if len(order) != d.n:
        raise CyclicInput("digraph contains a directed cycle")
    return order


def _bipartition_classes(g: UndirectedGraph,
                         vertices: Sequence[int]) -> Optional[tuple[set[int], set[int]]]:
    """2-coloring classes of g restricted to `vertices`, or None."""
    vs = sorted(vertices)
    vset = set(vs)
    side: dict[int, int] = {}
    for root in vs:
        if root in side:
            continue
        side[root] = 0
        queue = [root]
        qi = 0
        while qi < len(queue):
            v = queue[qi]
            qi += 1
            for w in g.adj(v):
                if w not in vset:
                    continue
                if w not in side:
                    side[w] = side[v] ^ 1
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    a = {v for v in vs if side[v] == 0}
    return a, vset - a


def _odd_cycle_from_walk(walk: Sequence[int]) -> list[int]:
    """Extract an odd simple cycle from a closed walk of odd length."""
    stack: list[int] = []
    pos: dict[int, int] = {}
    for v in walk:
        if v in pos:
            start = pos[v]
            cyc = stack[start:]
            if len(cyc) % 2 == 1:
                return cyc
            for u in cyc[1:]:
                del pos[u]
            del stack[start + 1:]
        else:
            pos[v] = len(stack)
            stack.append(v)
    raise AssertionError("closed odd walk must contain an odd cycle")


def _odd_dicycle_in_scc(d: Digraph, comp: frozenset[int]) -> list[int]:
    """A witness odd directed cycle inside a non-bipartite strong component."""
    root = min(comp)
    # BFS over (vertex, parity) states, arcs restricted to the component
    parent: dict[tuple[int, int], Optional[tuple[int, int]]] = {(root, 0): None}
    queue: list[tuple[int, int]] = [(root, 0)]
    qi = 0
    while qi < len(queue):
        v, par = queue[qi]
        qi += 1
        for w in d.out(v):
            if w not in comp:
                continue
            state = (w, par ^ 1)
            if state not in parent:
                parent[state] = (v, par)
                queue.append(state)
    if (root, 1) not in parent:
        raise AssertionError("non-bipartite strong component must carry an odd closed walk")
    walk: list[int] = []
    state: Optional[tuple[int, int]] = (root, 1)
    while state is not None:
        walk.append(state[0])
        state = parent[state]
    walk.reverse()  # root ... root, odd number of arcs
    return _odd_cycle_from_walk(walk)


def has_odd_dicycle(d: Digraph) -> tuple[bool, Optional[list[int]]]:
    """Whether D contains an odd directed cycle, with a witness when it does.

    Decided per strong component: the component contains an odd directed
    cycle iff its underlying graph is non-bipartite.
    """
    g = underlying_graph(d)
    for comp in strong_components(d).parts:
        if len(comp) == 1:
            continue
        if _bipartition_classes(g, sorted(comp)) is None:
            return True, _odd_dicycle_in_scc(d, comp)
    return False, None


def degeneracy_order(g: UndirectedGraph) -> tuple[list[int], int]:
    """Elimination order by repeated minimum-degree removal, plus degeneracy.

    In the returned order every vertex has at most `degeneracy` neighbors
    among later vertices.
    """
    remaining = set(range(g.n))
    deg = {v: g.degree(v) for v in remaining}
    order: list[int] = []
    degeneracy = 0
    while remaining:
        v = min(remaining, key=lambda x: (deg[x], x))
        degeneracy = max(degeneracy, deg[v])
        order.append(v)
        remaining.remove(v)
        for w in g.adj(v):
            if w in remaining:
                deg[w] -= 1
    return order, degeneracy

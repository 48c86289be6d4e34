"""The 9-vertex gadget and the reduction from hypergraph 2-coloring.

Majority 2-colorability is decided by whether every gadget's three shared
sink vertices can avoid being monochromatic, which is exactly 2-coloring
of a 3-uniform hypergraph with no monochromatic edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .digraph import Digraph
from .errors import MalformedEdge
from .verify import HALF, verify_majority

GADGET_ROLES = ("x1", "x2", "x3", "y1", "y2", "y3", "z1", "z2", "z3")


@dataclass(frozen=True)
class HypergraphInstance:
    """3-uniform hypergraph: n vertices, edges as 3-element vertex sets."""

    n: int
    edges: tuple[tuple[int, int, int], ...]

    @staticmethod
    def of(n: int, edges) -> "HypergraphInstance":
        norm = []
        for e in edges:
            es = tuple(sorted(set(e)))
            if len(es) != 3:
                raise MalformedEdge(f"edge {tuple(e)} is not 3 distinct vertices")
            if not all(0 <= v < n for v in es):
                raise MalformedEdge(f"edge {es} out of range for n={n}")
            norm.append(es)
        return HypergraphInstance(n, tuple(norm))


@dataclass(frozen=True)
class GadgetLayout:
    """Per-hyperedge map from the 9 gadget roles to global vertex ids."""

    placements: tuple[dict, ...]


def build_d9() -> Digraph:
    """The hardness gadget: 9 vertices, 30 arcs.

    Vertices 0-2 are the shared sinks x1..x3, 3-5 the middle layer y1..y3
    (each pointing at all three x's), 6-8 the triangle z1..z3; each z also
    points at all six x/y vertices, for out-degree 7.
    """
    arcs = []
    for y in (3, 4, 5):
        for x in (0, 1, 2):
            arcs.append((y, x))
    arcs += [(6, 7), (7, 8), (8, 6)]
    for z in (6, 7, 8):
        for v in range(6):
            arcs.append((z, v))
    return Digraph(9, arcs)


def d9_extends(precolor: tuple[int, int, int]) -> bool:
    """Whether a {1,2}-precoloring of x1..x3 extends to a majority 2-coloring,
    decided by trying all 2^6 extensions."""
    d = build_d9()
    for ext in product((1, 2), repeat=6):
        coloring = {i: precolor[i] for i in range(3)}
        coloring.update({i + 3: ext[i] for i in range(6)})
        if not verify_majority(d, coloring, HALF):
            return True
    return False


def check_d9_observation() -> bool:
    """Exhaustively confirm: extendable iff the x-precoloring is non-constant."""
    for precolor in product((1, 2), repeat=3):
        expected = len(set(precolor)) > 1
        if d9_extends(precolor) != expected:
            return False
    return True


def reduce_hypergraph(h: HypergraphInstance) -> tuple[Digraph, GadgetLayout]:
    """One gadget copy per hyperedge, x-roles identified with its vertices.

    The result has n + 6|E| vertices and is majority 2-colorable iff the
    hypergraph has a 2-coloring with no monochromatic edge.  Identification
    touches only sinks, which is what makes the equivalence work.
    """
    placements = []
    arcs = []
    for idx, edge in enumerate(h.edges):
        base = h.n + 6 * idx
        ids = {
            "x1": edge[0], "x2": edge[1], "x3": edge[2],
            "y1": base, "y2": base + 1, "y3": base + 2,
            "z1": base + 3, "z2": base + 4, "z3": base + 5,
        }
        placements.append(ids)
        for yr in ("y1", "y2", "y3"):
            for xr in ("x1", "x2", "x3"):
                arcs.append((ids[yr], ids[xr]))
        arcs += [(ids["z1"], ids["z2"]), (ids["z2"], ids["z3"]),
                 (ids["z3"], ids["z1"])]
        for zr in ("z1", "z2", "z3"):
            for vr in ("x1", "x2", "x3", "y1", "y2", "y3"):
                arcs.append((ids[zr], ids[vr]))
    d = Digraph(h.n + 6 * len(h.edges), arcs)
    return d, GadgetLayout(tuple(placements))


def pull_back_coloring(h: HypergraphInstance, coloring) -> dict[int, int]:
    """Restrict a majority 2-coloring of the reduced digraph to the
    hypergraph vertices."""
    return {v: coloring[v] for v in range(h.n)}

"""Text formats: edge lists, colorings, lists, partitions, fractional
colorings, hypergraphs.

Serialization is bit-exact (sorted records, LF endings) so golden files
stay stable; parse(serialize(x)) is the identity on every format.
"""

from __future__ import annotations

from typing import Mapping

from .digraph import Digraph, VertexPartition
from .errors import FormatError
from .hardness import HypergraphInstance
from .verify import FractionalColoring


def _data_lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines()
            if ln.strip() and not ln.lstrip().startswith("#")]


def parse_digraph(text: str) -> Digraph:
    lines = _data_lines(text)
    if not lines:
        raise FormatError("empty digraph document")
    try:
        n, m = map(int, lines[0].split())
    except ValueError as exc:
        raise FormatError(f"bad header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise FormatError(f"header promises {m} arcs, found {len(lines) - 1}")
    arcs = []
    for ln in lines[1:]:
        try:
            u, v = map(int, ln.split())
        except ValueError as exc:
            raise FormatError(f"bad arc line {ln!r}") from exc
        arcs.append((u, v))
    try:
        d = Digraph(n, arcs)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    if len(d.arcs) != m:
        raise FormatError("duplicate arcs in document")
    return d


def serialize_digraph(d: Digraph) -> str:
    lines = [f"{d.n} {len(d.arcs)}"]
    lines += [f"{u} {v}" for u, v in sorted(d.arcs)]
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> dict[int, int]:
    coloring = {}
    for ln in _data_lines(text):
        try:
            v, c = map(int, ln.split())
        except ValueError as exc:
            raise FormatError(f"bad coloring line {ln!r}") from exc
        coloring[v] = c
    return coloring


def serialize_coloring(coloring: Mapping[int, int]) -> str:
    lines = [f"{v} {coloring[v]}" for v in sorted(coloring)]
    return "\n".join(lines) + "\n" if lines else ""


def parse_lists(text: str) -> dict[int, frozenset[int]]:
    lists = {}
    for ln in _data_lines(text):
        parts = ln.split()
        try:
            v = int(parts[0])
            cols = frozenset(int(c) for c in parts[1:])
        except ValueError as exc:
            raise FormatError(f"bad lists line {ln!r}") from exc
        if not cols:
            raise FormatError(f"vertex {v} has an empty list")
        lists[v] = cols
    return lists


def serialize_lists(lists: Mapping[int, frozenset[int]]) -> str:
    lines = [f"{v} " + " ".join(str(c) for c in sorted(lists[v]))
             for v in sorted(lists)]
    return "\n".join(lines) + "\n" if lines else ""


def parse_partition(text: str, n: int) -> VertexPartition:
    """One part per line; 'empty' marks an empty part."""
    parts = []
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        if ln == "empty":
            parts.append(frozenset())
            continue
        try:
            parts.append(frozenset(int(v) for v in ln.split()))
        except ValueError as exc:
            raise FormatError(f"bad partition line {ln!r}") from exc
    try:
        return VertexPartition(n, tuple(parts))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def serialize_partition(p: VertexPartition) -> str:
    lines = []
    for part in p.parts:
        lines.append(" ".join(str(v) for v in sorted(part)) if part else "empty")
    return "\n".join(lines) + "\n"


def parse_fractional(text: str) -> FractionalColoring:
    entries = []
    for ln in _data_lines(text):
        if ":" not in ln:
            raise FormatError(f"bad fractional line {ln!r}")
        w_txt, vs_txt = ln.split(":", 1)
        try:
            w = float(w_txt)
            vs = frozenset(int(v) for v in vs_txt.split())
        except ValueError as exc:
            raise FormatError(f"bad fractional line {ln!r}") from exc
        entries.append((vs, w))
    return FractionalColoring(tuple(entries))


def serialize_fractional(fc: FractionalColoring) -> str:
    lines = []
    for s, w in sorted(fc.entries, key=lambda e: (sorted(e[0]), e[1])):
        lines.append(f"{w:.12g} : " + " ".join(str(v) for v in sorted(s)))
    return "\n".join(lines) + "\n" if lines else ""


def parse_hypergraph(text: str) -> HypergraphInstance:
    lines = _data_lines(text)
    if not lines:
        raise FormatError("empty hypergraph document")
    try:
        n, m = map(int, lines[0].split())
    except ValueError as exc:
        raise FormatError(f"bad header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise FormatError(f"header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        try:
            edges.append(tuple(int(v) for v in ln.split()))
        except ValueError as exc:
            raise FormatError(f"bad edge line {ln!r}") from exc
    return HypergraphInstance.of(n, edges)


def serialize_hypergraph(h: HypergraphInstance) -> str:
    lines = [f"{h.n} {len(h.edges)}"]
    lines += [" ".join(str(v) for v in e) for e in h.edges]
    return "\n".join(lines) + "\n"

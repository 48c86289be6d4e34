"""Constructive majority-coloring procedures.

Each routine follows the inductive structure of its existence proof, with
deterministic scheduling wherever the argument allows a free choice:
candidate scans go in ascending vertex id, ties in color selection go to
the smallest color.  Every output is checkable with verify.verify_majority
at the operation's declared threshold.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Mapping, Optional, Sequence

from .digraph import (Digraph, UndirectedGraph, VertexPartition,
                      _bipartition_classes, degeneracy_order, has_odd_dicycle,
                      strong_components, topological_order, underlying_graph)
from .errors import (BadPartition, ChromaticTooHighOrUnknown, ComponentTooHard,
                     CyclicInput, InstanceTooLarge,
                     MonochromaticListOddDicycle, OddDicycle, ParamOutOfRange,
                     PrecoloredNonSink, PreconditionViolated)
from .exact import exact_od3_choice

Color = Hashable


def _subdigraph_with_sink_heads(d: Digraph, x: Iterable[int],
                                arcs: Optional[set] = None
                                ) -> tuple[Digraph, list[int], list[int]]:
    """D[X] plus the arcs leaving X and their heads, heads kept as sinks.

    Returns (subdigraph, new-id -> old-id map, head old-ids).
    """
    arcset = arcs if arcs is not None else d.arcs
    xset = set(x)
    heads = sorted({w for (u, w) in arcset if u in xset and w not in xset})
    old = sorted(xset) + [h for h in heads if h not in xset]
    pos = {v: i for i, v in enumerate(old)}
    sub_arcs = [(pos[u], pos[w]) for (u, w) in arcset
                if u in xset and (w in xset or w in pos)]
    return Digraph(len(old), sub_arcs), old, heads


def color_acyclic_alpha(d: Digraph, palette: int | Sequence[Color],
                        precolored: Optional[Mapping[int, Color]] = None
                        ) -> dict[int, Color]:
    """1/k-majority coloring of an acyclic digraph extending a sink precoloring.

    Vertices are processed so that every out-neighborhood is colored first;
    each vertex gets a color appearing least frequently among its colored
    out-neighbors, smallest color id on ties.
    """
    if isinstance(palette, int):
        cols: list[Color] = list(range(1, palette + 1))
    else:
        cols = sorted(set(palette))
    if not cols:
        raise ParamOutOfRange("empty palette")
    colset = set(cols)
    pre = dict(precolored or {})
    for v, col in pre.items():
        if d.outdeg(v) != 0:
            raise PrecoloredNonSink(f"vertex {v} has out-degree {d.outdeg(v)}")
        if col not in colset:
            raise ParamOutOfRange(f"precolor {col!r} outside the palette")
    order = topological_order(d)
    coloring: dict[int, Color] = {}
    for v in order:
        if v in pre:
            coloring[v] = pre[v]
            continue
        counts = {col: 0 for col in cols}
        for w in d.out(v):
            counts[coloring[w]] += 1
        coloring[v] = min(cols, key=lambda col: (counts[col], cols.index(col)))
    return coloring


def majority2_no_odd_cycles(d: Digraph,
                            precoloring: Optional[Mapping[int, int]] = None
                            ) -> dict[int, int]:
    """Majority 2-coloring of an odd-dicycle-free digraph, extending a sink
    precoloring with colors 1, 2.

    Strong components are colored against their already-colored successors.
    Inside a component X the W-procedure peels any vertex x0 whose majority
    among colored out-neighbors is already safe to fix (the minority color),
    and the bipartition of D[X] colors whatever remains.
    """
    found, witness = has_odd_dicycle(d)
    if found:
        raise OddDicycle(witness)
    pre = dict(precoloring or {})
    for v, col in pre.items():
        if d.outdeg(v) != 0:
            raise PrecoloredNonSink(f"vertex {v} has out-degree {d.outdeg(v)}")
        if col not in (1, 2):
            raise ParamOutOfRange(f"precolor {col!r} not in {{1, 2}}")

    g = underlying_graph(d)
    coloring: dict[int, int] = {}
    comps = strong_components(d).parts
    for comp in reversed(comps):  # successors of each component colored first
        if len(comp) == 1:
            v = next(iter(comp))
            if d.outdeg(v) == 0:
                coloring[v] = pre.get(v, 1)
                continue
        w_set = set(comp)
        # colored out-neighbors outside W, per color
        d1 = {x: 0 for x in w_set}
        d2 = {x: 0 for x in w_set}
        for x in w_set:
            for y in d.out(x):
                if y not in w_set:
                    if coloring[y] == 1:
                        d1[x] += 1
                    else:
                        d2[x] += 1
        while True:
            x0 = min((x for x in w_set
                      if 2 * max(d1[x], d2[x]) >= d.outdeg(x)), default=None)
            if x0 is None:
                break
            w_set.remove(x0)
            col = 1 if d1[x0] < d2[x0] else 2
            coloring[x0] = col
            bucket = d1 if col == 1 else d2
            for u in d.inn(x0):
                if u in w_set:
                    bucket[u] += 1
        if w_set:
            classes = _bipartition_classes(g, sorted(comp))
            assert classes is not None, "bipartite by the odd-dicycle check"
            side_a, _ = classes
            for x in w_set:
                coloring[x] = 1 if x in side_a else 2
    return coloring


def list_majority2(d: Digraph, lists: Mapping[int, Iterable[Color]]
                   ) -> dict[int, Color]:
    """Majority coloring choosing from 2-lists.

    Requires that no odd directed cycle has all its vertices on the same
    list.  Arcs between disjoint-list endpoints can never be monochromatic
    and are dropped; each list class is then colored independently with its
    outgoing boundary precolored by the forced shared color.
    """
    norm = {}
    for v in range(d.n):
        lv = frozenset(lists[v])
        if len(lv) != 2:
            raise ParamOutOfRange(f"vertex {v}: list size {len(lv)} != 2")
        norm[v] = lv
    kept = {(u, w) for (u, w) in d.arcs if norm[u] & norm[w]}
    groups: dict[frozenset, list[int]] = {}
    for v in range(d.n):
        groups.setdefault(norm[v], []).append(v)

    coloring: dict[int, Color] = {}
    for pair in sorted(groups, key=lambda p: tuple(sorted(p))):
        xs = sorted(groups[pair])
        low, high = sorted(pair)
        sub_x, map_x = d.induced(xs)
        found, wit = has_odd_dicycle(sub_x)
        if found:
            raise MonochromaticListOddDicycle([map_x[i] for i in wit], pair)
        sub, old, heads = _subdigraph_with_sink_heads(d, xs, kept)
        pos = {v: i for i, v in enumerate(old)}
        pre = {}
        for y in heads:
            shared = norm[y] & pair  # exactly one color: lists intersect, differ
            pre[pos[y]] = 1 if next(iter(shared)) == low else 2
        csub = majority2_no_odd_cycles(sub, pre)
        for x in xs:
            coloring[x] = low if csub[pos[x]] == 1 else high
    return coloring


def majority3_from_odd_partition(d: Digraph, partition: VertexPartition
                                 ) -> dict[int, int]:
    """Majority 3-coloring from a partition into odd-dicycle-free parts.

    Part i gets the 2-list missing color i+1; the 2-list machinery does the
    rest.
    """
    if len(partition.parts) != 3:
        raise BadPartition(len(partition.parts), "expected exactly 3 parts")
    part_lists = (frozenset({2, 3}), frozenset({1, 3}), frozenset({1, 2}))
    lists: dict[int, frozenset[int]] = {}
    for i, part in enumerate(partition.parts):
        sub, mp = d.induced(part)
        found, wit = has_odd_dicycle(sub)
        if found:
            raise BadPartition(i, "part induces an odd directed cycle",
                               [mp[j] for j in wit])
        for v in part:
            lists[v] = part_lists[i]
    return list_majority2(d, lists)


def _dsatur_greedy(g: UndirectedGraph) -> list[set[int]]:
    """Proper coloring classes by DSATUR (max saturation, max degree, min id)."""
    colors: dict[int, int] = {}
    sat: list[set[int]] = [set() for _ in range(g.n)]
    uncolored = set(range(g.n))
    classes: list[set[int]] = []
    while uncolored:
        v = max(uncolored, key=lambda x: (len(sat[x]), g.degree(x), -x))
        col = 0
        while col in sat[v]:
            col += 1
        colors[v] = col
        if col == len(classes):
            classes.append(set())
        classes[col].add(v)
        uncolored.remove(v)
        for w in g.adj(v):
            if w in uncolored:
                sat[w].add(col)
    return classes


def _list_color_graph(n: int, adj: Sequence[Sequence[int]],
                      lists: Sequence[Sequence[Color]]
                      ) -> Optional[dict[int, Color]]:
    """Proper list coloring of an undirected graph by backtracking.

    Most-constrained-vertex ordering with forward checking; deterministic.
    """
    domains: list[list[Color]] = [sorted(lists[v], key=repr) for v in range(n)]
    coloring: dict[int, Color] = {}

    def rec() -> bool:
        if len(coloring) == n:
            return True
        pending = [v for v in range(n) if v not in coloring]
        v = min(pending,
                key=lambda x: (sum(1 for c in domains[x] if all(
                    coloring.get(w) != c for w in adj[x])), x))
        for col in domains[v]:
            if any(coloring.get(w) == col for w in adj[v]):
                continue
            coloring[v] = col
            if rec():
                return True
            del coloring[v]
        return False

    if rec():
        return dict(coloring)
    return None


def partition_chromatic6(d: Digraph, exact_cap: int = 40) -> VertexPartition:
    """3-part partition with each part a union of two independent sets of U(D).

    DSATUR greedy first; if it needs more than 6 colors, exact backtracking
    up to `exact_cap` vertices decides whether 6 suffice.
    """
    g = underlying_graph(d)
    classes = _dsatur_greedy(g)
    if len(classes) > 6:
        if g.n > exact_cap:
            raise ChromaticTooHighOrUnknown(
                f"greedy needed {len(classes)} colors and n={g.n} exceeds "
                f"the exact-search cap {exact_cap}")
        res = _list_color_graph(g.n, [g.adj(v) for v in range(g.n)],
                                [range(6)] * g.n)
        if res is None:
            raise ChromaticTooHighOrUnknown("chromatic number exceeds 6")
        classes = [set() for _ in range(6)]
        for v, col in res.items():
            classes[col].add(v)
    while len(classes) < 6:
        classes.append(set())
    parts = tuple(frozenset(classes[2 * i] | classes[2 * i + 1])
                  for i in range(3))
    return VertexPartition(d.n, parts)


def _is_acyclic(d: Digraph, members: Sequence[int], extra: int) -> bool:
    vs = set(members)
    vs.add(extra)
    state = {v: 0 for v in vs}  # 0 unseen, 1 on stack, 2 done

    def dfs(v: int) -> bool:
        state[v] = 1
        for w in d.out(v):
            if w in vs:
                if state[w] == 1:
                    return False
                if state[w] == 0 and not dfs(w):
                    return False
        state[v] = 2
        return True

    return all(state[v] != 0 or dfs(v) for v in sorted(vs))


def partition_dichromatic(d: Digraph, parts: int,
                          max_vertices: int = 20) -> Optional[VertexPartition]:
    """Partition into `parts` acyclic-inducing parts, or None if impossible."""
    if parts not in (2, 3):
        raise ParamOutOfRange("parts must be 2 or 3")
    if d.n > max_vertices:
        raise InstanceTooLarge(f"n={d.n} exceeds cap {max_vertices}")
    assign: list[int] = [-1] * d.n
    members: list[list[int]] = [[] for _ in range(parts)]

    def rec(v: int, used: int) -> bool:
        if v == d.n:
            return True
        for p in range(min(used + 1, parts)):
            if _is_acyclic(d, members[p], v):
                assign[v] = p
                members[p].append(v)
                if rec(v + 1, max(used, p + 1)):
                    return True
                members[p].pop()
                assign[v] = -1
        return False

    if not rec(0, 0):
        return None
    return VertexPartition(
        d.n, tuple(frozenset(members[p]) for p in range(parts)))


def _doubled_lists(lists3: Mapping[int, frozenset],
                   vertices: Iterable[int]) -> dict[int, list[tuple]]:
    out = {}
    for v in vertices:
        base = sorted(lists3[v], key=repr)[:3]
        out[v] = [(c, i) for c in base for i in (0, 1)]
    return out


def _od3_core_component(d: Digraph, lists3: Mapping[int, frozenset],
                        component_cap: int) -> dict[int, Color]:
    """Choice with no monochromatic odd dicycle on one underlying component."""
    g = underlying_graph(d)
    order, degen = degeneracy_order(g)
    doubled = _doubled_lists(lists3, range(d.n))
    if degen <= 5:
        c6: dict[int, tuple] = {}
        for v in reversed(order):  # <= degen colored neighbors when v arrives
            used = {c6[w] for w in g.adj(v) if w in c6}
            c6[v] = next(col for col in doubled[v] if col not in used)
        return {v: c6[v][0] for v in range(d.n)}
    if d.n == 7 and len(g.edges) == 21 and len(d.arcs) == 21:
        # a 7-vertex tournament; exhaustive search over the 3-lists
        res = exact_od3_choice(d, lists3)
        if res is None:
            raise ComponentTooHard("7-vertex tournament search failed")
        return res
    if g.max_degree() <= 6 and d.n <= component_cap:
        res6 = _list_color_graph(d.n, [g.adj(v) for v in range(d.n)],
                                 [doubled[v] for v in range(d.n)])
        if res6 is None:
            raise ComponentTooHard(
                "6-list coloring of a max-degree-6 component failed")
        return {v: res6[v][0] for v in range(d.n)}
    if d.n > component_cap:
        raise ComponentTooHard(
            f"component of size {d.n} exceeds cap {component_cap}")
    raise PreconditionViolated("component outside all handled regimes")


def _underlying_components(d: Digraph,
                           vertices: Optional[Iterable[int]] = None
                           ) -> list[list[int]]:
    g = underlying_graph(d)
    pool = set(range(d.n)) if vertices is None else set(vertices)
    comps = []
    seen: set[int] = set()
    for root in sorted(pool):
        if root in seen:
            continue
        comp = [root]
        seen.add(root)
        qi = 0
        while qi < len(comp):
            v = comp[qi]
            qi += 1
            for w in g.adj(v):
                if w in pool and w not in seen:
                    seen.add(w)
                    comp.append(w)
        comps.append(sorted(comp))
    return comps


def od3_choose(d: Digraph, lists: Mapping[int, Iterable[Color]],
               component_cap: int = 64) -> dict[int, Color]:
    """List choice (3-lists) with no monochromatic odd directed cycle.

    Peels vertices of in-degree at most 2 (their color just avoids the
    remaining in-neighbors); the unpeelable core is 3-in/3-out-regular and
    is handled per underlying component: degenerate greedy with doubled
    lists, exhaustive search for 7-vertex tournaments, or capped exact
    6-list coloring.
    """
    norm = {}
    for v in range(d.n):
        lv = frozenset(lists[v])
        if len(lv) < 3:
            raise ParamOutOfRange(f"vertex {v}: list size {len(lv)} < 3")
        norm[v] = lv
    g = underlying_graph(d)
    deg_ok = all(d.outdeg(v) <= 3 or d.indeg(v) <= 2 for v in range(d.n))
    _, degen = degeneracy_order(g)
    if not (deg_ok or degen <= 5 or g.max_degree() <= 6):
        raise PreconditionViolated(
            "need per-vertex (d+ <= 3 or d- <= 2), a 5-degenerate underlying "
            "graph, or underlying maximum degree <= 6")

    active = set(range(d.n))
    indeg = {v: d.indeg(v) for v in active}
    peeled: list[tuple[int, tuple[int, ...]]] = []
    while True:
        v = min((x for x in active if indeg[x] <= 2), default=None)
        if v is None:
            break
        in_nbrs = tuple(u for u in d.inn(v) if u in active)
        peeled.append((v, in_nbrs))
        active.remove(v)
        for w in d.out(v):
            if w in active:
                indeg[w] -= 1

    choice: dict[int, Color] = {}
    for comp in _underlying_components(d, active):
        sub, mp = d.induced(comp)
        sub_lists = {i: norm[mp[i]] for i in range(sub.n)}
        sub_choice = _od3_core_component(sub, sub_lists, component_cap)
        for i, col in sub_choice.items():
            choice[mp[i]] = col

    for v, in_nbrs in reversed(peeled):
        used = {choice[u] for u in in_nbrs}
        choice[v] = next(c for c in sorted(norm[v], key=repr) if c not in used)
    return choice


def _k7_equal_lists(sub: Digraph, cols: list) -> dict[int, Color]:
    """Majority 3-coloring of a digraph with complete 7-vertex underlying
    graph when all three lists coincide."""
    digons = [sum(1 for w in sub.out(v) if sub.has_arc(w, v)) for v in range(7)]
    if min(digons) <= 3:
        v = min(range(7), key=lambda x: (digons[x], x))
        others = [u for u in range(7) if u != v]
        for i in range(6):
            for j in range(i + 1, 6):
                trio = [v, others[i], others[j]]
                tri_sub, _ = sub.induced(trio)
                if has_odd_dicycle(tri_sub)[0]:
                    continue
                rest = [u for u in others if u not in (others[i], others[j])]
                partition = VertexPartition.of(7, trio, rest[:2], rest[2:])
                lists = {}
                part_lists = ({cols[1], cols[2]}, {cols[0], cols[2]},
                              {cols[0], cols[1]})
                for pi, part in enumerate(partition.parts):
                    for u in part:
                        lists[u] = frozenset(part_lists[pi])
                return list_majority2(sub, lists)
        raise ComponentTooHard("no triangle-free trio found at <= 3 digons")
    # every vertex in >= 4 digons, hence out-degree >= 4: any coloring with
    # class sizes 2, 2, 3 works
    from .verify import HALF, verify_majority
    from itertools import combinations
    universe = set(range(7))
    for first in combinations(range(7), 2):
        for second in combinations(sorted(universe - set(first)), 2):
            third = sorted(universe - set(first) - set(second))
            cand = {}
            for u in first:
                cand[u] = cols[0]
            for u in second:
                cand[u] = cols[1]
            for u in third:
                cand[u] = cols[2]
            if not verify_majority(sub, cand, HALF):
                return cand
    raise ComponentTooHard("no 2/2/3 coloring of the K7 component is valid")


def _k7_unequal_lists(sub: Digraph,
                      lists3: Mapping[int, frozenset]) -> dict[int, Color]:
    """Choose 2-sublists so that no three vertices share one, then 2-list it."""
    from itertools import combinations, product
    options = [sorted((frozenset(p) for p in
                       combinations(sorted(lists3[v], key=repr)[:3], 2)),
                      key=lambda s: tuple(sorted(s, key=repr)))
               for v in range(7)]
    best = None
    best_cost = None
    for pick in product(*options):
        counts: dict[frozenset, int] = {}
        for p in pick:
            counts[p] = counts.get(p, 0) + 1
        if max(counts.values()) >= 3:
            continue
        cost = sum(1 for (u, w) in sub.arcs if u < w or not sub.has_arc(w, u)
                   if pick[u] == pick[w])
        if best_cost is None or cost < best_cost:
            best, best_cost = pick, cost
    if best is None:
        raise ComponentTooHard("no sublist assignment avoids a triple")
    return list_majority2(sub, {v: best[v] for v in range(7)})


def majority3_choose(d: Digraph, lists: Mapping[int, Iterable[Color]]
                     ) -> dict[int, Color]:
    """Majority coloring from 3-lists for bounded-degree digraphs.

    Requires max out-degree <= 4, max total degree <= 7, or underlying
    maximum degree <= 6.  Out-degree-4 vertices first lose one out-arc
    (restoring it keeps them at <= 2 same-colored out-neighbors of 4);
    complete-7-vertex underlying components get the dedicated treatment;
    everything else goes through pair-lists, the odd-cycle-free choice, and
    the 2-list coloring.
    """
    norm = {}
    for v in range(d.n):
        lv = frozenset(lists[v])
        if len(lv) < 3:
            raise ParamOutOfRange(f"vertex {v}: list size {len(lv)} < 3")
        norm[v] = lv
    g = underlying_graph(d)
    if not (d.max_outdeg() <= 4 or d.max_total_deg() <= 7
            or g.max_degree() <= 6):
        raise PreconditionViolated(
            "need max out-degree <= 4, max degree <= 7, or underlying "
            "maximum degree <= 6")

    arcs = set(d.arcs)
    for v in range(d.n):  # out-degrees never grow, one ascending pass suffices
        if d.outdeg(v) == 4:
            victim = (v, min(d.out(v)))
            arcs.remove(victim)
    d_r = Digraph(d.n, arcs)

    coloring: dict[int, Color] = {}
    rest: list[int] = []
    g_r = underlying_graph(d_r)
    for comp in _underlying_components(d_r):
        if len(comp) == 7 and all(g_r.degree(v) == 6 for v in comp):
            sub, mp = d_r.induced(comp)
            sub_lists = {i: norm[mp[i]] for i in range(7)}
            if len(set(sub_lists.values())) == 1:
                cols = sorted(next(iter(sub_lists.values())), key=repr)[:3]
                csub = _k7_equal_lists(sub, cols)
            else:
                csub = _k7_unequal_lists(sub, sub_lists)
            for i, col in csub.items():
                coloring[mp[i]] = col
        else:
            rest.extend(comp)

    if rest:
        sub, mp = d_r.induced(rest)
        from itertools import combinations
        pair_lists = {
            i: frozenset(tuple(sorted(p, key=repr)) for p in
                         combinations(sorted(norm[mp[i]], key=repr)[:3], 2))
            for i in range(sub.n)
        }
        chosen = od3_choose(sub, pair_lists)
        two_lists = {i: frozenset(chosen[i]) for i in range(sub.n)}
        csub = list_majority2(sub, two_lists)
        for i, col in csub.items():
            coloring[mp[i]] = col
    return coloring


def alpha_majority_dichrom2(d: Digraph, partition: VertexPartition,
                            k: int) -> dict[int, int]:
    """1/k-majority coloring with 2k-1 colors from a 2-part acyclic partition.

    Part 0 is colored from {1..k}, part 1 from {1, k+1..2k-1}; each part is
    colored inside its own digraph where the outgoing boundary and every
    sink carry color 1.
    """
    if k < 2:
        raise ParamOutOfRange("k must be at least 2")
    if len(partition.parts) != 2:
        raise BadPartition(len(partition.parts), "expected exactly 2 parts")
    palettes = (list(range(1, k + 1)), [1] + list(range(k + 1, 2 * k)))
    coloring: dict[int, int] = {}
    for i, part in enumerate(partition.parts):
        sub_check, mp_check = d.induced(part)
        found, wit = has_odd_dicycle(sub_check)
        try:
            topological_order(sub_check)
        except CyclicInput:
            raise BadPartition(i, "part does not induce an acyclic subdigraph",
                               [mp_check[j] for j in wit] if found else None)
        sub, old, _heads = _subdigraph_with_sink_heads(d, part)
        pos = {v: j for j, v in enumerate(old)}
        pre = {j: 1 for j in range(sub.n) if sub.outdeg(j) == 0}
        csub = color_acyclic_alpha(sub, palettes[i], pre)
        for x in part:
            coloring[x] = csub[pos[x]]
    return coloring

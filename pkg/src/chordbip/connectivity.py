"""Components, vertex cuts and exact vertex connectivity.

Internally everything works on ``(adj, within)`` pairs: the subgraph induced
by the bitmask ``within`` of a parent graph.  That avoids relabeling inside
the hot loops of the checkers and the search.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .graph import Graph, GraphError, bits, induced

MAX_CUT_ENUMERATION = 6


class BudgetError(ValueError):
    """An enumeration was asked to go beyond its fixed budget."""


@dataclass(frozen=True)
class CutReport:
    cut: int
    components: tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.components)


@dataclass(frozen=True)
class SComponent:
    vertices: int
    graph: Graph
    labels: tuple[int, ...]


# --- mask-level primitives ----------------------------------------------------

def reach(adj: Sequence[int], within: int, start: int) -> int:
    """Vertices of ``within`` reachable from ``start`` (start included)."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def components_in(adj: Sequence[int], within: int) -> list[int]:
    out = []
    rest = within
    while rest:
        low = (rest & -rest).bit_length() - 1
        c = reach(adj, within, low)
        out.append(c)
        rest &= ~c
    return out


def is_connected_in(adj: Sequence[int], within: int) -> bool:
    if not within:
        return True
    low = (within & -within).bit_length() - 1
    return reach(adj, within, low) == within


def cut_vertices_in(adj: Sequence[int], within: int) -> int:
    """Vertices whose removal increases the number of components."""
    base = len(components_in(adj, within))
    out = 0
    for v in bits(within):
        rest = within & ~(1 << v)
        if len(components_in(adj, rest)) > base - (0 if adj[v] & within else 1):
            out |= 1 << v
    return out


def is_biconnected_in(adj: Sequence[int], within: int) -> bool:
    """Connected with at least three vertices and no cut vertex."""
    if within.bit_count() < 3 or not is_connected_in(adj, within):
        return False
    for v in bits(within):
        if not is_connected_in(adj, within & ~(1 << v)):
            return False
    return True


def _local_connectivity(adj: Sequence[int], within: int, s: int, t: int, cap: int) -> int:
    """Max number of internally disjoint s-t paths, stopping at ``cap``.

    Unit-capacity max flow on the vertex-split network: vertex ``x`` becomes
    ``x_in -> x_out`` with capacity 1 (unbounded for s and t), every edge
    ``xy`` becomes ``x_out -> y_in`` and ``y_out -> x_in``.
    """
    verts = list(bits(within))
    # node ids: 2*x is x_in, 2*x+1 is x_out
    flow: dict[tuple[int, int], int] = {}
    big = len(verts) + 1

    def capacity(a: int, b: int) -> int:
        if a // 2 == b // 2:
            if a % 2 == 0 and b == a + 1:
                x = a // 2
                return big if x in (s, t) else 1
            return 0
        if a % 2 == 1 and b % 2 == 0 and adj[a // 2] >> (b // 2) & 1:
            return big
        return 0

    def arcs(a: int):
        x = a // 2
        if a % 2 == 0:
            yield a + 1
            for y in bits(adj[x] & within):
                yield 2 * y + 1
        else:
            yield a - 1
            for y in bits(adj[x] & within):
                yield 2 * y

    source, sink = 2 * s + 1, 2 * t
    total = 0
    while total < cap:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in arcs(a):
                if b in parent:
                    continue
                if capacity(a, b) - flow.get((a, b), 0) + flow.get((b, a), 0) > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            back = flow.get((b, a), 0)
            if back:
                flow[(b, a)] = back - 1
            else:
                flow[(a, b)] = flow.get((a, b), 0) + 1
            b = a
        total += 1
    return total


def connectivity_in(adj: Sequence[int], within: int) -> int:
    size = within.bit_count()
    if size == 0:
        raise GraphError("connectivity of the empty graph is undefined")
    if not is_connected_in(adj, within):
        return 0
    degs = {v: (adj[v] & within).bit_count() for v in bits(within)}
    if all(d == size - 1 for d in degs.values()):
        return size - 1
    v = min(degs, key=lambda x: (degs[x], x))
    best = degs[v]
    nv = adj[v] & within
    for u in bits(within & ~nv & ~(1 << v)):
        best = min(best, _local_connectivity(adj, within, v, u, best))
    nbrs = list(bits(nv))
    for i, x in enumerate(nbrs):
        for y in nbrs[i + 1:]:
            if not adj[x] >> y & 1:
                best = min(best, _local_connectivity(adj, within, x, y, best))
    return best


def is_k_connected_in(adj: Sequence[int], within: int, k: int) -> bool:
    """``κ >= k`` with cheap paths for k <= 2."""
    if k <= 0:
        return True
    if k == 1:
        return within.bit_count() >= 2 and is_connected_in(adj, within)
    if k == 2 and within.bit_count() >= 3:
        return is_biconnected_in(adj, within)
    if within.bit_count() < k + 1:
        return False
    return connectivity_in(adj, within) >= k


def is_cut_in(adj: Sequence[int], within: int, s: int) -> bool:
    rest = within & ~s
    if not rest:
        return False
    return not is_connected_in(adj, rest)


def cuts_up_to_in(adj: Sequence[int], within: int, s_max: int) -> list[int]:
    if s_max > MAX_CUT_ENUMERATION:
        raise BudgetError(f"cut enumeration budget is {MAX_CUT_ENUMERATION}, got {s_max}")
    verts = list(bits(within))
    out = []
    for size in range(0, min(s_max, len(verts)) + 1):
        for combo in combinations(verts, size):
            s = 0
            for v in combo:
                s |= 1 << v
            if is_cut_in(adj, within, s):
                out.append(s)
    return out


# --- public API on Graph values -----------------------------------------------

def components(g: Graph) -> list[int]:
    return components_in(g.adj, g.all_vertices)


def is_vertex_cut(g: Graph, s: int) -> bool:
    if s & ~g.all_vertices:
        raise GraphError("cut is not a subset of V(G)")
    return is_cut_in(g.adj, g.all_vertices, s)


def cut_report(g: Graph, s: int) -> CutReport:
    if not is_vertex_cut(g, s):
        raise GraphError("not a vertex cut")
    return CutReport(s, tuple(components_in(g.adj, g.all_vertices & ~s)))


def cut_vertices(g: Graph) -> int:
    return cut_vertices_in(g.adj, g.all_vertices)


def vertex_connectivity(g: Graph) -> int:
    """κ(G): n-1 for complete graphs, 0 when disconnected, else min cut size."""
    if g.n == 0:
        raise GraphError("connectivity of the empty graph is undefined")
    return connectivity_in(g.adj, g.all_vertices)


def connectivity_by_enumeration(g: Graph) -> int:
    """Brute-force κ over all vertex subsets; the cross-check for the flow route."""
    if g.n == 0:
        raise GraphError("connectivity of the empty graph is undefined")
    full = g.all_vertices
    if all(r == full & ~(1 << v) for v, r in enumerate(g.adj)):
        return g.n - 1
    verts = range(g.n)
    for size in range(g.n):
        for combo in combinations(verts, size):
            s = 0
            for v in combo:
                s |= 1 << v
            if is_cut_in(g.adj, full, s):
                return size
    raise AssertionError("non-complete graph without a vertex cut")


def minimum_vertex_cuts(g: Graph) -> list[int]:
    full = g.all_vertices
    if g.n < 2 or all(r == full & ~(1 << v) for v, r in enumerate(g.adj)):
        raise GraphError("complete graphs have no vertex cut")
    k = vertex_connectivity(g)
    if k > 5 or g.n > 24:
        raise BudgetError("minimum cut enumeration is limited to κ <= 5, n <= 24")
    out = []
    for combo in combinations(range(g.n), k):
        s = 0
        for v in combo:
            s |= 1 << v
        if is_cut_in(g.adj, full, s):
            out.append(s)
    return out


def all_vertex_cuts_up_to(g: Graph, s_max: int) -> list[int]:
    return cuts_up_to_in(g.adj, g.all_vertices, s_max)


def s_components(g: Graph, s: int) -> list[SComponent]:
    report = cut_report(g, s)
    out = []
    for f in report.components:
        sub, labels = induced(g, s | f)
        out.append(SComponent(s | f, sub, labels))
    return out

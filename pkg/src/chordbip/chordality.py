"""Chordal bipartite recognition, bisimplicial edges and elimination orders."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .connectivity import BudgetError, reach
from .graph import Edge, Graph, GraphError, bipartition, bits

ORACLE_MAX_VERTICES = 12


class Reason(str, Enum):
    OK = "ok"
    NOT_BIPARTITE = "not-bipartite"
    CHORDLESS_CYCLE = "chordless-cycle"


@dataclass(frozen=True)
class Recognition:
    chordal_bipartite: bool
    reason: Reason
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.chordal_bipartite


@dataclass(frozen=True)
class EliminationOrder:
    steps: tuple[Edge, ...]
    valid: bool


def _require_bipartite(g: Graph) -> None:
    if bipartition(g) is None:
        raise GraphError("graph is not bipartite")


# --- bisimplicial edges -------------------------------------------------------

def bisimplicial_in(adj: Sequence[int], within: int, u: int, v: int) -> bool:
    nu = adj[u] & within & ~(1 << v)
    nv = adj[v] & within & ~(1 << u)
    return all(adj[x] & nv == nv for x in bits(nu))


def is_bisimplicial(g: Graph, e: Sequence[int]) -> bool:
    u, v = e
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    _require_bipartite(g)
    return bisimplicial_in(g.adj, g.all_vertices, u, v)


def _bisimplicial_edges_in(adj: Sequence[int], within: int) -> list[Edge]:
    out = []
    for u in bits(within):
        for v in bits(adj[u] & within & ~((2 << u) - 1)):
            if bisimplicial_in(adj, within, u, v):
                out.append(Edge(u, v))
    return out


def bisimplicial_edges(g: Graph) -> list[Edge]:
    _require_bipartite(g)
    return _bisimplicial_edges_in(g.adj, g.all_vertices)


# --- chordless long cycles ----------------------------------------------------

def _shortest_path(adj: Sequence[int], within: int, a: int, d: int) -> list[int]:
    parent = {a: a}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if x == d:
            break
        for y in bits(adj[x] & within):
            if y not in parent:
                parent[y] = x
                queue.append(y)
    path = [d]
    while path[-1] != a:
        path.append(parent[path[-1]])
    return path[::-1]


def _hole_through(adj: Sequence[int], within: int, b: int, c: int) -> list[int] | None:
    """A chordless cycle of length >= 6 using ``bc`` as the middle of a P4.

    Every such cycle reads ``a, b, c, d, ...`` with the tail running from d
    back to a outside ``N(b) ∪ N(c)``; so ``a`` and ``d`` (non-adjacent) must
    share a component of what is left after deleting ``N(b) ∪ N(c)``.  A
    shortest a-d path through that component closes an induced cycle.
    """
    nb = adj[b] & within
    nc = adj[c] & within
    rest = within & ~(nb | nc)
    if not rest:
        return None
    comp_of: dict[int, int] = {}
    left = rest
    while left:
        low = (left & -left).bit_length() - 1
        seen = 1 << low
        frontier = seen
        while frontier:
            nxt = 0
            for x in bits(frontier):
                nxt |= adj[x]
            nxt &= rest & ~seen
            seen |= nxt
            frontier = nxt
        for x in bits(seen):
            comp_of[x] = seen
        left &= ~seen
    comps = set(comp_of.values())
    for a in bits(nb & ~(1 << c) & ~nc):
        touch_a = [k for k in comps if adj[a] & k]
        if not touch_a:
            continue
        for d in bits(nc & ~(1 << b) & ~adj[a] & ~nb):
            for k in touch_a:
                if adj[d] & k:
                    tail = _shortest_path(adj, k | (1 << a) | (1 << d), d, a)
                    return [a, b, c] + tail[:-1]
    return None


def _find_hole_in(adj: Sequence[int], within: int) -> list[int] | None:
    for b in bits(within):
        for c in bits(adj[b] & within):
            cyc = _hole_through(adj, within, b, c)
            if cyc is not None:
                return cyc
    return None


def _find_long_hole_general(adj: Sequence[int], within: int) -> list[int] | None:
    # five consecutive hole vertices a,b,c,d,e; the tail e..a avoids N(b),N(c),N(d)
    for c in bits(within):
        nc = adj[c] & within
        for b in bits(nc):
            nb = adj[b] & within
            for d in bits(nc & ~nb & ~(1 << b)):
                nd = adj[d] & within
                rest = within & ~(nb | nc | nd)
                for a in bits(nb & ~nc & ~nd & ~(1 << c)):
                    for e in bits(nd & ~nb & ~nc & ~adj[a] & ~(1 << a) & ~(1 << c)):
                        zone = rest | (1 << a) | (1 << e)
                        if reach(adj, zone, a) >> e & 1:
                            return [a, b, c, d] + _shortest_path(adj, zone, e, a)[:-1]
    return None


def find_chordless_cycle_ge6(g: Graph) -> tuple[int, ...] | None:
    """A chordless cycle with at least six vertices, or None."""
    if bipartition(g) is None:
        cyc = _find_long_hole_general(g.adj, g.all_vertices)
    else:
        cyc = _find_hole_in(g.adj, g.all_vertices)
    return None if cyc is None else tuple(cyc)


def recognize(g: Graph) -> Recognition:
    if bipartition(g) is None:
        return Recognition(False, Reason.NOT_BIPARTITE)
    cyc = find_chordless_cycle_ge6(g)
    if cyc is not None:
        return Recognition(False, Reason.CHORDLESS_CYCLE, cyc)
    return Recognition(True, Reason.OK)


def is_chordal_bipartite(g: Graph) -> bool:
    return recognize(g).chordal_bipartite


def is_chordal_bipartite_in(adj: Sequence[int], within: int) -> bool:
    """Mask-level recognizer; assumes the induced subgraph is bipartite."""
    return _find_hole_in(adj, within) is None


def oracle_is_chordal_bipartite(g: Graph) -> bool:
    """Definition applied literally: every cycle of length >= 6 must have a chord.

    Enumerates all cycles by backtracking (each cycle rooted at its least
    vertex) and tests each one for a chord.
    """
    if g.n > ORACLE_MAX_VERTICES:
        raise BudgetError(f"oracle is limited to n <= {ORACLE_MAX_VERTICES}")
    if bipartition(g) is None:
        return False
    adj = g.adj
    n = g.n

    def has_chord(cycle: list[int]) -> bool:
        k = len(cycle)
        for i in range(k):
            for j in range(i + 2, k):
                if i == 0 and j == k - 1:
                    continue
                if adj[cycle[i]] >> cycle[j] & 1:
                    return True
        return False

    for root in range(n):
        path = [root]
        on_path = 1 << root
        stack = [iter(sorted(bits(adj[root] & ~((2 << root) - 1))))]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                on_path &= ~(1 << path.pop())
                continue
            if on_path >> nxt & 1:
                continue
            path.append(nxt)
            on_path |= 1 << nxt
            # close the cycle; second vertex < last vertex fixes the direction
            if len(path) >= 6 and adj[nxt] >> root & 1 and path[1] < nxt:
                if not has_chord(path):
                    return False
            stack.append(iter(sorted(bits(adj[nxt] & ~((2 << root) - 1)))))
        # root is fully explored
    return True


# --- perfect edge elimination orders ------------------------------------------

def find_peeo(g: Graph, mode: str = "greedy") -> EliminationOrder | None:
    """Perfect edge elimination order, or None when none is found.

    ``greedy`` always eliminates the lexicographically least bisimplicial
    edge; it is complete on chordal bipartite graphs only.  ``backtracking``
    searches exhaustively and decides existence for any bipartite graph.
    """
    _require_bipartite(g)
    adj = g.adj
    if mode == "greedy":
        within = g.all_vertices
        steps = []
        while True:
            cands = _bisimplicial_edges_in(adj, within)
            if not any(adj[v] & within for v in bits(within)):
                return EliminationOrder(tuple(steps), True)
            if not cands:
                return None
            e = cands[0]
            steps.append(e)
            within &= ~((1 << e.u) | (1 << e.v))
    if mode != "backtracking":
        raise ValueError(f"unknown mode {mode!r}")

    dead: set[int] = set()

    def solve(within: int) -> list[Edge] | None:
        if not any(adj[v] & within for v in bits(within)):
            return []
        if within in dead:
            return None
        for e in _bisimplicial_edges_in(adj, within):
            rest = solve(within & ~((1 << e.u) | (1 << e.v)))
            if rest is not None:
                return [e] + rest
        dead.add(within)
        return None

    found = solve(g.all_vertices)
    return None if found is None else EliminationOrder(tuple(found), True)


def peeo_violation(g: Graph, steps: Sequence[Sequence[int]]) -> tuple[int, str] | None:
    """First failing step of a candidate order as ``(index, reason)``.

    Index ``len(steps)`` with reason ``"edges-remain"`` means every step was
    fine but the final graph still has an edge.
    """
    adj = g.adj
    within = g.all_vertices
    used = 0
    for i, (u, v) in enumerate(steps):
        if not (0 <= u < g.n and 0 <= v < g.n) or u == v:
            return i, "bad-vertex"
        pair = (1 << u) | (1 << v)
        if used & pair:
            return i, "not-disjoint"
        used |= pair
        if not adj[u] >> v & 1:
            return i, "not-an-edge"
        if not bisimplicial_in(adj, within, u, v):
            return i, "not-bisimplicial"
        within &= ~pair
    if any(adj[v] & within for v in bits(within)):
        return len(steps), "edges-remain"
    return None


def verify_peeo(g: Graph, order: EliminationOrder | Sequence[Sequence[int]]) -> bool:
    steps = order.steps if isinstance(order, EliminationOrder) else order
    return peeo_violation(g, steps) is None


# --- random corpus --------------------------------------------------------------

def has_hole_through_edge(adj: Sequence[int], within: int, x: int, y: int) -> bool:
    """Whether some chordless cycle of length >= 6 uses the edge ``xy``.

    Any such cycle has ``xy`` as the middle edge of one of its P4s.
    """
    return (_hole_through(adj, within, x, y) is not None
            or _hole_through(adj, within, y, x) is not None)


def random_chordal_bipartite(n: int, target_m: int, seed: int) -> Graph:
    """Random spanning tree on a random bipartition, grown by accepted cross edges."""
    if not 4 <= n <= 32:
        raise ValueError("n must lie in 4..32")
    if target_m < n - 1:
        raise ValueError("target_m is below n - 1")
    rng = random.Random(seed)
    sizes = [p for p in range(1, n) if p * (n - p) >= target_m]
    if not sizes:
        raise ValueError("target_m exceeds every part-size product")
    p = rng.choice(sizes)
    labels = list(range(n))
    rng.shuffle(labels)
    xs, ys = labels[:p], labels[p:]

    rows = [0] * n

    def join(a: int, b: int) -> None:
        rows[a] |= 1 << b
        rows[b] |= 1 << a

    join(xs[0], ys[0])
    placed_x, placed_y = [xs[0]], [ys[0]]
    rest = xs[1:] + ys[1:]
    rng.shuffle(rest)
    x_set = set(xs)
    for v in rest:
        if v in x_set:
            join(v, rng.choice(placed_y))
            placed_x.append(v)
        else:
            join(v, rng.choice(placed_x))
            placed_y.append(v)

    m = n - 1
    absent = [(a, b) for a in sorted(xs) for b in sorted(ys) if not rows[a] >> b & 1]
    rng.shuffle(absent)
    full = (1 << n) - 1
    for a, b in absent:
        if m >= target_m:
            break
        join(a, b)
        if has_hole_through_edge(rows, full, a, b):
            rows[a] &= ~(1 << b)
            rows[b] &= ~(1 << a)
        else:
            m += 1
    return Graph(n, tuple(rows))

"""Builders for the named graph families, each with the claims it should satisfy.

Labelings are fixed so that graph6 output is stable:

* ``path(k)`` / ``cycle(k)``: vertices in walking order.
* ``complete_bipartite(p, q)``: part X is ``0..p-1``.
* ``grid(r, c)``: lattice point ``(i, j)`` is ``i*c + j``.
* ``extremal_odd(n)``: ``grid(2, (n-3)/2)`` first, then the three vertices
  contributed by the glued K(2,3).
* ``figure4_graph()``: top part ``t0..t4`` is ``0..4``, bottom ``b5..b9`` is
  ``5..9``; the distinguished edge is ``v = t1``, ``u = b5``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import MAX_VERTICES, Edge, Graph, GraphError


@dataclass(frozen=True)
class Claims:
    kappa: int
    m: int
    chordal_bipartite: bool


@dataclass(frozen=True)
class NamedGraph:
    graph: Graph
    name: str
    claims: Claims


def path(k: int) -> Graph:
    if k < 1:
        raise GraphError("path needs k >= 1")
    return Graph.from_edges(k, ((i, i + 1) for i in range(k - 1)))


def cycle(k: int) -> Graph:
    if k < 3:
        raise GraphError("cycle needs k >= 3")
    return Graph.from_edges(k, ((i, (i + 1) % k) for i in range(k)))


def complete_bipartite(p: int, q: int) -> Graph:
    if p < 1 or q < 1:
        raise GraphError("complete_bipartite needs p, q >= 1")
    return Graph.from_edges(p + q, ((i, p + j) for i in range(p) for j in range(q)))


def grid(rows: int, cols: int) -> Graph:
    """Cartesian product of paths on ``rows`` and ``cols`` vertices."""
    if rows < 1 or cols < 1:
        raise GraphError("grid needs both sides >= 1")
    if rows * cols > MAX_VERTICES:
        raise GraphError(f"grid({rows}, {cols}) exceeds {MAX_VERTICES} vertices")
    edges = []
    for i in range(rows):
        for j in range(cols):
            v = i * cols + j
            if j + 1 < cols:
                edges.append((v, v + 1))
            if i + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(rows * cols, edges)


def extremal_even(n: int) -> NamedGraph:
    if n % 2 or n < 4:
        raise GraphError("extremal_even needs an even n >= 4")
    return NamedGraph(grid(2, n // 2), f"extremal-even({n})",
                      Claims(2, 3 * n // 2 - 2, True))


def extremal_odd(n: int) -> NamedGraph:
    """K(2,3) glued along one edge onto an end rung of the 2 x (n-3)/2 ladder.

    The glued K(2,3) edge joins a size-2-part vertex to a (degree 2)
    size-3-part vertex; it is identified with the rung ``0 -- r``.
    """
    if n % 2 == 0 or n < 5:
        raise GraphError("extremal_odd needs an odd n >= 5")
    r = (n - 3) // 2
    ladder = grid(2, r)
    edges = [tuple(e) for e in ladder.edges()]
    # K(2,3) parts {a1, a2} and {b1, b2, b3}; a1-b3 is the rung 0 -- r
    a1, b3 = r, 0
    a2, b1, b2 = 2 * r, 2 * r + 1, 2 * r + 2
    edges += [(a1, b1), (a1, b2), (a2, b1), (a2, b2), (a2, b3)]
    g = Graph.from_edges(n, edges)
    return NamedGraph(g, f"extremal-odd({n})", Claims(2, (3 * n - 3) // 2, True))


FIGURE4_EDGES = (
    (0, 5), (0, 6), (0, 8), (0, 9),
    (1, 5), (1, 6), (1, 9),
    (2, 7), (2, 8), (2, 9),
    (3, 7), (3, 8), (3, 9),
    (4, 5), (4, 6), (4, 7), (4, 8), (4, 9),
)
FIGURE4_V = 1
FIGURE4_U = 5
FIGURE4_EDGE = Edge.of(FIGURE4_V, FIGURE4_U)


def figure4_graph() -> NamedGraph:
    """The 3-connected example whose bisimplicial edge t1-b5 drops κ to 2."""
    return NamedGraph(Graph.from_edges(10, FIGURE4_EDGES), "figure4",
                      Claims(3, 18, True))


def named(family: str, *params: int) -> NamedGraph:
    """Look up a family by its CLI name and wrap it with claims."""
    from .chordality import is_chordal_bipartite
    from .connectivity import vertex_connectivity

    plain = {
        "path": path,
        "cycle": cycle,
        "complete-bipartite": complete_bipartite,
        "grid": grid,
    }
    if family == "extremal-even":
        return extremal_even(*params)
    if family == "extremal-odd":
        return extremal_odd(*params)
    if family == "figure4":
        if params:
            raise GraphError("figure4 takes no parameters")
        return figure4_graph()
    if family not in plain:
        raise GraphError(f"unknown family {family!r}")
    g = plain[family](*params)
    # plain families carry computed rather than asserted claims
    claims = Claims(vertex_connectivity(g) if g.n else 0, g.m, is_chordal_bipartite(g))
    name = f"{family}({', '.join(map(str, params))})"
    return NamedGraph(g, name, claims)


FAMILIES = ("path", "cycle", "complete-bipartite", "grid",
            "extremal-even", "extremal-odd", "figure4")

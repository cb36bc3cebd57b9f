"""Small immutable graphs with one integer bitmask per adjacency row.

Vertices are ``0..n-1`` and ``n <= 64``.  Vertex sets are passed around as
plain ``int`` bitmasks (bit ``v`` set means ``v`` is in the set).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    """Raised for out-of-range vertices, non-edges and similar misuse."""


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Edge(NamedTuple):
    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        if a == b:
            raise GraphError(f"loop at vertex {a}")
        return cls(a, b) if a < b else cls(b, a)


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    m: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"order {self.n} outside 0..{MAX_VERTICES}")
        adj = tuple(self.adj)
        if len(adj) != self.n:
            raise GraphError("adjacency must have exactly n rows")
        full = (1 << self.n) - 1
        total = 0
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"row {v} points outside the vertex set")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for w in bits(row):
                if not adj[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency {v}-{w}")
            total += row.bit_count()
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "m", total // 2)

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # skips validation; callers guarantee symmetry and irreflexivity
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        object.__setattr__(g, "m", sum(r.bit_count() for r in adj) // 2)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        rows = [0] * n
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise GraphError(f"edge ({a}, {b}) outside 0..{n - 1}")
            if a == b:
                raise GraphError(f"loop at vertex {a}")
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @property
    def all_vertices(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[Edge]:
        """All edges, normalized and in lexicographic order."""
        out = []
        for u, row in enumerate(self.adj):
            for v in bits(row >> (u + 1)):
                out.append(Edge(u, u + 1 + v))
        return out

    def has_edge(self, a: int, b: int) -> bool:
        self._check_vertex(a)
        self._check_vertex(b)
        return bool(self.adj[a] >> b & 1)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range 0..{self.n - 1}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, g6={to_graph6(self)!r})"


@dataclass(frozen=True)
class Bipartition:
    part_x: int
    part_y: int


# --- graph6 -----------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (an optional ``>>graph6<<`` header is accepted)."""
    s = text.strip()
    base = 0
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
        base = len(_G6_HEADER)
    if not s:
        raise Graph6Error("empty graph6 string", base)
    data = []
    for i, ch in enumerate(s):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"invalid graph6 byte {ch!r}", base + i)
        data.append(c - 63)

    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) >= 2 and data[1] < 63:
        if len(data) < 4:
            raise Graph6Error("truncated order header", base + len(data))
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    else:
        raise Graph6Error("order too large for this toolkit", base)
    if n > MAX_VERTICES:
        raise Graph6Error(f"order {n} exceeds {MAX_VERTICES}", base)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise Graph6Error(
            f"truncated bit body: need {nbytes} bytes, got {len(body)}",
            base + len(data),
        )
    if len(body) > nbytes:
        raise Graph6Error("trailing bytes after bit body", base + pos + nbytes)

    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6 and body and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("non-zero padding bits", base + pos + nbytes - 1)
    return Graph._trusted(n, tuple(rows))


def to_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        out = [n + 63]
    else:
        out = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    acc = 0
    count = 0
    adj = g.adj
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            count += 1
            if count == 6:
                out.append(acc + 63)
                acc = count = 0
    if count:
        out.append((acc << (6 - count)) + 63)
    return "".join(map(chr, out))


# --- vertex removal -----------------------------------------------------------

def induced(g: Graph, keep: int) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``keep``, relabeled contiguously in label order.

    The second value lists, for each new label, the old label it came from.
    """
    if keep & ~g.all_vertices:
        raise GraphError("vertex set is not a subset of V(G)")
    old = tuple(bits(keep))
    pos = {v: i for i, v in enumerate(old)}
    rows = []
    for v in old:
        r = 0
        for w in bits(g.adj[v] & keep):
            r |= 1 << pos[w]
        rows.append(r)
    return Graph._trusted(len(old), tuple(rows)), old


def remove_vertices(g: Graph, s: int) -> Graph:
    if s & ~g.all_vertices:
        raise GraphError("removed set is not a subset of V(G)")
    return induced(g, g.all_vertices & ~s)[0]


def eliminate_edge(g: Graph, e: Sequence[int]) -> Graph:
    """``G ⊖ uv``: delete both endpoints of the edge ``uv``."""
    u, v = e
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    return remove_vertices(g, (1 << u) | (1 << v))


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Graph whose vertex ``i`` is the old vertex ``order[i]``."""
    if sorted(order) != list(range(g.n)):
        raise GraphError("order must be a permutation of the vertices")
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        r = 0
        for w in bits(g.adj[v]):
            r |= 1 << pos[w]
        rows.append(r)
    return Graph._trusted(g.n, tuple(rows))


# --- degrees and bipartiteness ------------------------------------------------

def neighbors(g: Graph, v: int) -> int:
    g._check_vertex(v)
    return g.adj[v]


def degree(g: Graph, v: int) -> int:
    return neighbors(g, v).bit_count()


def min_degree(g: Graph) -> int:
    if g.n == 0:
        return 0
    return min(r.bit_count() for r in g.adj)


def bipartition(g: Graph) -> Bipartition | None:
    """BFS 2-colouring; each component's least vertex goes to part X."""
    colour = [-1] * g.n
    x = y = 0
    for start in range(g.n):
        if colour[start] >= 0:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in bits(g.adj[v]):
                if colour[w] < 0:
                    colour[w] = 1 - colour[v]
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return None
    for v, c in enumerate(colour):
        if c == 0:
            x |= 1 << v
        else:
            y |= 1 << v
    return Bipartition(x, y)


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def is_complete_bipartite_between(g: Graph, a: int, b: int) -> bool:
    if a & b:
        raise GraphError("vertex sets overlap")
    adj = g.adj
    return all(adj[x] & b == b for x in bits(a))

"""Exhaustive isomorph-free search over small bipartite graphs.

Labeled candidates are p x q biadjacency matrices whose rows (as q-bit
integers) are non-decreasing; every bipartite graph with that bipartition
has such a labeling, which removes the p! row permutations up front.
Survivors of the cheap filters are reduced to isomorphism classes with
:func:`canonical_form`.

Work is split into tasks keyed by ``(p, q, m, first row)``.  The task list
depends only on the query, and merged results are sorted, so the worker
count never changes the output.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable, Iterator, Sequence

from .chordality import find_peeo, is_chordal_bipartite, is_chordal_bipartite_in
from .connectivity import BudgetError, is_connected_in, is_k_connected_in, vertex_connectivity
from .graph import Graph, Graph6Error, GraphError, bipartition, min_degree, parse_graph6, to_graph6
from .verify import theorem_bound

CANONICAL_MAX_VERTICES = 14
EXHAUSTIVE_MAX_VERTICES = 10


# --- canonical labeling -----------------------------------------------------------

def _refine(adj: Sequence[int], cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Split cells by neighbour counts into every cell until the partition is equitable."""
    while True:
        masks = []
        for c in cells:
            mk = 0
            for v in c:
                mk |= 1 << v
            masks.append(mk)
        out = []
        split = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                key = tuple((adj[v] & mk).bit_count() for mk in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                out.append(c)
            else:
                split = True
                out.extend(tuple(groups[key]) for key in sorted(groups))
        if not split:
            return out
        cells = out


def _leaves(adj: Sequence[int], cells: list[tuple[int, ...]]) -> Iterator[list[int]]:
    cells = _refine(adj, cells)
    for i, c in enumerate(cells):
        if len(c) > 1:
            break
    else:
        yield [c[0] for c in cells]
        return
    tried = set()
    for v in c:
        # swapping twins is an automorphism fixing everything individualized so far
        if adj[v] in tried:
            continue
        tried.add(adj[v])
        rest = tuple(w for w in c if w != v)
        yield from _leaves(adj, cells[:i] + [(v,), rest] + cells[i + 1:])


def _relabeled_rows(adj: Sequence[int], order: Sequence[int]) -> tuple[int, ...]:
    pos = [0] * len(adj)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        r = 0
        x = adj[v]
        while x:
            low = x & -x
            r |= 1 << pos[low.bit_length() - 1]
            x ^= low
        rows.append(r)
    return tuple(rows)


def canonical_form(g: Graph) -> str:
    """graph6 of a canonical relabeling that lists one whole part first.

    Individualization-refinement: the least adjacency encoding over all
    leaves of the search tree, started from the partition (smaller part,
    larger part), and from both orders when the parts have equal size.
    """
    if g.n > CANONICAL_MAX_VERTICES:
        raise BudgetError(f"canonical_form is limited to n <= {CANONICAL_MAX_VERTICES}")
    if g.n and not is_connected_in(g.adj, g.all_vertices):
        raise GraphError("canonical_form needs a connected graph")
    bp = bipartition(g)
    if bp is None:
        raise GraphError("canonical_form needs a bipartite graph")
    return to_graph6(Graph._trusted(g.n, _canonical_rows(g.adj, bp.part_x, bp.part_y)))


def _canonical_rows(adj: Sequence[int], x: int, y: int) -> tuple[int, ...]:
    xs = tuple(v for v in range(len(adj)) if x >> v & 1)
    ys = tuple(v for v in range(len(adj)) if y >> v & 1)
    if len(xs) > len(ys):
        xs, ys = ys, xs
    starts = [[xs, ys]] if len(xs) != len(ys) else [[xs, ys], [ys, xs]]
    best = None
    for cells in starts:
        cells = [c for c in cells if c]
        for order in _leaves(adj, cells):
            code = _relabeled_rows(adj, order)
            if best is None or code < best:
                best = code
    return best if best is not None else ()


# --- labeled enumeration ------------------------------------------------------------

def _row_values(q: int, min_deg: int) -> list[int]:
    return [r for r in range(1 << q) if r.bit_count() >= min_deg]


def _multisets(values: Sequence[int], start: int, count: int, edges: int,
               lo: int, hi: int) -> Iterator[list[int]]:
    """Non-decreasing index sequences of ``count`` rows with ``edges`` ones in total."""
    if count == 0:
        if edges == 0:
            yield []
        return
    if edges < lo * count or edges > hi * count:
        return
    for i in range(start, len(values)):
        pc = values[i].bit_count()
        if pc > edges:
            continue
        for tail in _multisets(values, i, count - 1, edges - pc, lo, hi):
            yield [values[i]] + tail


def _adjacency(rows: Sequence[int], p: int, q: int) -> tuple[int, ...]:
    adj = [r << p for r in rows]
    for j in range(q):
        col = 0
        for i, r in enumerate(rows):
            if r >> j & 1:
                col |= 1 << i
        adj.append(col)
    return tuple(adj)


@dataclass
class TaskResult:
    classes: dict[str, str] = field(default_factory=dict)  # canonical -> verdict tag
    examined: int = 0
    pruned: int = 0
    truncated: bool = False


def _run_task(task: tuple) -> TaskResult:
    """Enumerate one slice: shape (p, q), exactly m edges (or any m if None), first row fixed."""
    p, q, m, min_deg, kappa, first, predicate, deadline = task
    values = _row_values(q, max(min_deg, 1))
    res = TaskResult()
    full = (1 << (p + q)) - 1
    head = values[first]
    seqs: Iterable[list[int]]
    if m is None:
        seqs = (tail for e in range(0, (p - 1) * q + 1)
                for tail in _multisets(values, first, p - 1, e, max(min_deg, 1), q))
    else:
        seqs = _multisets(values, first, p - 1, m - head.bit_count(), max(min_deg, 1), q)
    for tail in seqs:
        res.examined += 1
        if deadline is not None and res.examined % 256 == 0 and time.time() > deadline:
            res.truncated = True
            break
        rows = [head] + tail
        adj = _adjacency(rows, p, q)
        if min_deg and any(adj[p + j].bit_count() < min_deg for j in range(q)):
            res.pruned += 1
            continue
        if not is_k_connected_in(adj, full, max(kappa, 1)):
            res.pruned += 1
            continue
        x = (1 << p) - 1
        canon = _canonical_rows(adj, x, full & ~x)
        key = to_graph6(Graph._trusted(p + q, canon))
        if key in res.classes:
            continue
        res.classes[key] = "pass" if _predicate(predicate, canon) else "fail"
    return res


def _predicate(name: str, adj: Sequence[int]) -> bool:
    full = (1 << len(adj)) - 1
    if name == "chordal-bipartite":
        return is_chordal_bipartite_in(adj, full)
    if name == "any":
        return True
    raise ValueError(f"unknown predicate {name!r}")


def _tasks_for(p: int, q: int, m: int | None, k: int, predicate: str,
               deadline: float | None) -> list[tuple]:
    values = _row_values(q, max(k, 1))
    out = []
    for i, v in enumerate(values):
        if m is not None and v.bit_count() + (p - 1) * max(k, 1) > m:
            continue
        out.append((p, q, m, k, k, i, predicate, deadline))
    return out


def _execute(tasks: list[tuple], jobs: int) -> list[TaskResult]:
    if jobs <= 1 or len(tasks) <= 1:
        return [_run_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_task, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))


# --- records --------------------------------------------------------------------------

@dataclass
class SearchRecord:
    n: int
    k: int
    m_min: int | None
    witnesses: list[str]
    stats: dict[str, int]
    exhaustive: bool = True
    truncated: bool = False

    def to_json(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "k": self.k,
            "m_min": self.m_min,
            "witnesses": list(self.witnesses),
            "stats": dict(sorted(self.stats.items())),
            "exhaustive": self.exhaustive,
            "truncated": self.truncated,
        }


def _shapes(n: int, k: int) -> list[tuple[int, int]]:
    return [(p, n - p) for p in range(max(k, 1), n // 2 + 1)]


def enumerate_min_size(n: int, k: int, *, jobs: int = 1, budget_ms: int | None = None,
                       progress: Callable[[str], None] | None = None,
                       max_n: int = EXHAUSTIVE_MAX_VERTICES) -> SearchRecord:
    """Least edge count of a k-connected chordal bipartite graph on n vertices.

    Edge counts are tried in increasing order from ``max(n, ceil(kn/2))``;
    the first count with a passing class is the minimum, and all passing
    classes at that count are returned as witnesses.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if not 4 <= n <= max_n:
        raise BudgetError(f"exhaustive mode covers 4 <= n <= {max_n}")
    deadline = None if budget_ms is None else time.time() + budget_ms / 1000
    stats = {"examined": 0, "pruned": 0, "classes": 0, "passed": 0}
    shapes = _shapes(n, k)
    top = max((p * q for p, q in shapes), default=0)
    for m in range(max(n, -(-k * n // 2)), top + 1):
        tasks = []
        for p, q in shapes:
            if k * p <= m <= p * q and k * q <= m:
                tasks += _tasks_for(p, q, m, k, "chordal-bipartite", deadline)
        results = _execute(tasks, jobs)
        merged: dict[str, str] = {}
        truncated = False
        for r in results:
            stats["examined"] += r.examined
            stats["pruned"] += r.pruned
            truncated |= r.truncated
            merged.update(r.classes)
        passing = sorted(c for c, tag in merged.items() if tag == "pass")
        stats["classes"] += len(merged)
        stats["passed"] += len(passing)
        if progress:
            progress(f"n={n} k={k} m={m}: {len(merged)} classes, {len(passing)} pass")
        if truncated:
            return SearchRecord(n, k, None, [], stats, exhaustive=False, truncated=True)
        if passing:
            return SearchRecord(n, k, m, passing, stats)
    return SearchRecord(n, k, None, [], stats)


def bipartite_classes(n: int, *, min_degree: int = 1, kappa: int = 1,
                      jobs: int = 1) -> list[str]:
    """Canonical graph6 of every connected bipartite class on n vertices with κ >= kappa."""
    if n == 1:
        return [to_graph6(Graph.empty(1))] if kappa <= 0 else []
    if n < 1:
        return []
    # κ >= kappa forces δ >= kappa, so one degree floor serves both filters
    floor = max(min_degree, kappa, 1)
    tasks = []
    for p, q in _shapes(n, floor):
        for i in range(len(_row_values(q, floor))):
            tasks.append((p, q, None, floor, kappa, i, "any", None))
    found: set[str] = set()
    for r in _execute(tasks, jobs):
        found.update(r.classes)
    return sorted(found)


def chordal_bipartite_classes(n: int, *, kappa: int = 1, jobs: int = 1) -> list[str]:
    return [s for s in bipartite_classes(n, kappa=kappa, jobs=jobs)
            if is_chordal_bipartite(parse_graph6(s))]


# --- external corpora ------------------------------------------------------------------

@dataclass
class Predicates:
    bipartite: bool = False
    chordal_bipartite: bool = False
    kappa_at_least: int | None = None
    min_degree: int | None = None
    edges_at_most: int | None = None
    edges_equal: int | None = None
    bound: str | None = None  # "le" or "eq" against theorem_bound(n)

    def accepts(self, g: Graph) -> bool:
        if self.edges_at_most is not None and g.m > self.edges_at_most:
            return False
        if self.edges_equal is not None and g.m != self.edges_equal:
            return False
        if self.bound is not None:
            if g.n < 4:
                return False
            b = theorem_bound(g.n)
            if (self.bound == "le" and g.m > b) or (self.bound == "eq" and g.m != b):
                return False
        if self.min_degree is not None and min_degree(g) < self.min_degree:
            return False
        if self.bipartite and bipartition(g) is None:
            return False
        if self.chordal_bipartite and not is_chordal_bipartite(g):
            return False
        if self.kappa_at_least is not None:
            if g.n == 0 or vertex_connectivity(g) < self.kappa_at_least:
                return False
        return True


@dataclass
class FilterStats:
    read: int = 0
    malformed: int = 0
    passed: int = 0
    min_m: int | None = None
    min_witness: str | None = None

    def to_json(self) -> dict[str, Any]:
        return {"read": self.read, "malformed": self.malformed, "passed": self.passed,
                "min_m": self.min_m, "min_witness": self.min_witness}


def filter_stream(lines: Iterable[str], predicates: Predicates,
                  stats: FilterStats | None = None) -> Iterator[tuple[str, Graph]]:
    """Yield ``(line, graph)`` for every well-formed line passing ``predicates``.

    Blank lines are ignored; malformed lines are counted in ``stats`` and
    skipped.
    """
    if stats is None:
        stats = FilterStats()
    for raw in lines:
        line = raw.strip()
        if not line:
            continue
        stats.read += 1
        try:
            g = parse_graph6(line)
        except Graph6Error:
            stats.malformed += 1
            continue
        if not predicates.accepts(g):
            continue
        stats.passed += 1
        if stats.min_m is None or g.m < stats.min_m:
            stats.min_m = g.m
            stats.min_witness = line
        yield line, g


# --- conjecture exploration ---------------------------------------------------------------

@dataclass
class ConjectureRow:
    n: int
    k: int
    m_min: int | None
    witnesses: list[str]
    mode: str  # "exhaustive" or "sampled"
    truncated: bool = False

    @property
    def intercept(self) -> Fraction | None:
        if self.m_min is None:
            return None
        return Fraction((1 + self.k) * self.n, 2) - self.m_min

    def to_json(self) -> dict[str, Any]:
        ic = self.intercept
        return {
            "n": self.n,
            "k": self.k,
            "m_min": self.m_min,
            "slope_term": str(Fraction((1 + self.k) * self.n, 2)),
            "intercept": None if ic is None else str(ic),
            "mode": self.mode,
            "truncated": self.truncated,
            "witnesses": list(self.witnesses),
        }


def conjecture_table(k: int, n_range: Iterable[int], *, stream: Iterable[str] | None = None,
                     jobs: int = 1, budget_ms: int | None = None,
                     progress: Callable[[str], None] | None = None) -> list[ConjectureRow]:
    """Per n, the least size of a k-connected chordal bipartite graph.

    Orders up to the exhaustive limit are searched completely; larger orders
    are read from ``stream`` and only give upper bounds ("sampled" rows).
    """
    if k < 3:
        raise ValueError("the conjecture concerns k >= 3")
    ns = sorted(set(n_range))
    sampled: dict[int, list[tuple[int, str]]] = {}
    big = [n for n in ns if n > EXHAUSTIVE_MAX_VERTICES]
    if big:
        if stream is None:
            raise BudgetError(f"orders {big} need an external stream")
        preds = Predicates(chordal_bipartite=True, kappa_at_least=k)
        for line, g in filter_stream(stream, preds):
            if g.n in big:
                sampled.setdefault(g.n, []).append((g.m, canonical_form(g)
                                                    if g.n <= CANONICAL_MAX_VERTICES else line))
    rows = []
    for n in ns:
        if n > EXHAUSTIVE_MAX_VERTICES:
            found = sampled.get(n, [])
            if not found:
                rows.append(ConjectureRow(n, k, None, [], "sampled"))
                continue
            low = min(m for m, _ in found)
            wit = sorted({w for m, w in found if m == low})
            rows.append(ConjectureRow(n, k, low, wit, "sampled"))
        elif n < 2 * k:
            # a k-connected bipartite graph needs both parts of size >= k
            rows.append(ConjectureRow(n, k, None, [], "exhaustive"))
        else:
            rec = enumerate_min_size(n, k, jobs=jobs, budget_ms=budget_ms, progress=progress)
            rows.append(ConjectureRow(n, k, rec.m_min, rec.witnesses,
                                      "exhaustive" if rec.exhaustive else "truncated",
                                      rec.truncated))
    return rows


# --- the converse of PEEO existence ---------------------------------------------------------

def peeo_counterexample_search(n_max: int, *, jobs: int = 1) -> Graph | None:
    """First connected bipartite class (by n, then canonical graph6) that has a
    perfect edge elimination order but is not chordal bipartite."""
    if n_max > EXHAUSTIVE_MAX_VERTICES:
        raise BudgetError(f"n_max is limited to {EXHAUSTIVE_MAX_VERTICES}")
    for n in range(1, n_max + 1):
        for s in bipartite_classes(n, kappa=0 if n == 1 else 1, jobs=jobs):
            g = parse_graph6(s)
            if is_chordal_bipartite(g):
                continue
            if find_peeo(g, "backtracking") is not None:
                return g
    return None

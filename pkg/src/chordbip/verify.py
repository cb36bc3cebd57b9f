"""Instance checkers for the structural lemmas and the minimum-size bound.

Each checker returns a verdict whose status is ``pass``, ``fail`` or
``vacuous`` (no instance met the hypotheses).  Verdicts are truthy unless
they failed.  Precondition violations raise :class:`PreconditionError`
carrying a short code; ``check_preconditions=False`` bypasses them so tests
can feed deliberately broken inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Any, Callable, Sequence

from .chordality import (
    _bisimplicial_edges_in,
    bisimplicial_in,
    is_chordal_bipartite,
    is_chordal_bipartite_in,
)
from .connectivity import (
    MAX_CUT_ENUMERATION,
    BudgetError,
    components_in,
    connectivity_in,
    cut_vertices_in,
    cuts_up_to_in,
    is_biconnected_in,
    is_connected_in,
    is_cut_in,
    vertex_connectivity,
)
from .graph import Edge, Graph, bits, is_complete_bipartite_between, remove_vertices


class PreconditionError(ValueError):
    def __init__(self, code: str, message: str = "") -> None:
        super().__init__(f"{code}: {message}" if message else code)
        self.code = code


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    VACUOUS = "vacuous"


@dataclass(frozen=True)
class Verdict:
    checker: str
    status: Status
    instances: int = 0
    witness: dict[str, Any] | None = None
    detail: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.status is not Status.FAIL

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "checker": self.checker,
            "status": self.status.value,
            "instances": self.instances,
            "witness": self.witness,
        }
        if self.detail:
            out["detail"] = self.detail
        return out


def as_list(mask: int) -> list[int]:
    return list(bits(mask))


def _verdict(name: str, instances: int, witness: dict | None, **detail: Any) -> Verdict:
    if witness is not None:
        status = Status.FAIL
    elif instances == 0:
        status = Status.VACUOUS
    else:
        status = Status.PASS
    return Verdict(name, status, instances, witness, detail)


# --- the bound ------------------------------------------------------------------

def theorem_bound(n: int) -> int:
    """Least size of a 2-connected chordal bipartite graph of order ``n``."""
    if n < 4:
        raise ValueError("the bound is stated for n >= 4")
    return (3 * n - 3) // 2 if n % 2 else 3 * n // 2 - 2


@dataclass(frozen=True)
class BoundVerdict:
    n: int
    m: int
    kappa: int
    bound: int | None
    satisfied: bool
    vacuous: bool

    def __bool__(self) -> bool:
        return self.satisfied


def check_theorem(g: Graph, bound: Callable[[int], int] = theorem_bound) -> BoundVerdict:
    kappa = vertex_connectivity(g) if g.n else 0
    b = bound(g.n) if g.n >= 4 else None
    applies = g.n >= 4 and kappa >= 2 and is_chordal_bipartite(g)
    if not applies:
        return BoundVerdict(g.n, g.m, kappa, b, True, True)
    return BoundVerdict(g.n, g.m, kappa, b, g.m >= b, False)


def conjecture_lower(n: int, k: int) -> Fraction:
    """``(1 + k) n / 2``, the conjectured slope with the unknown offset dropped."""
    if k < 3 or n < k + 2:
        raise ValueError("needs k >= 3 and n >= k + 2")
    return Fraction((1 + k) * n, 2)


# --- connectivity after deletion ----------------------------------------------------

def check_lemma1(g: Graph, s: int,
                 kappa: Callable[[Graph], int] = vertex_connectivity) -> Verdict:
    """κ(G - S) >= κ(G) - |S|."""
    if s & ~g.all_vertices:
        raise PreconditionError("not-subset")
    if s == g.all_vertices:
        raise PreconditionError("removes-everything")
    k = kappa(g)
    k_rest = kappa(remove_vertices(g, s))
    witness = None
    if k_rest < k - s.bit_count():
        witness = {"S": as_list(s), "kappa": k, "kappa_rest": k_rest}
    return _verdict("lemma1", 1, witness)


def sweep_lemma1(g: Graph, max_size: int = 3,
                 kappa: Callable[[Graph], int] = vertex_connectivity) -> Verdict:
    if g.n == 0:
        return _verdict("lemma1", 0, None)
    k = kappa(g)
    count = 0
    for size in range(0, min(max_size, g.n - 1) + 1):
        for combo in combinations(range(g.n), size):
            s = 0
            for v in combo:
                s |= 1 << v
            count += 1
            rest = remove_vertices(g, s)
            if kappa(rest) < k - size:
                return _verdict("lemma1", count, {"S": list(combo), "kappa": k,
                                                  "kappa_rest": kappa(rest)})
    return _verdict("lemma1", count, None)


# --- hereditary closure ---------------------------------------------------------------

def check_lemma3(g: Graph, check_preconditions: bool = True) -> Verdict:
    """Induced subgraphs on n-1 and n-2 vertices stay chordal bipartite."""
    if check_preconditions and not is_chordal_bipartite(g):
        raise PreconditionError("not-chordal-bipartite")
    full = g.all_vertices
    count = 0
    for size in (1, 2):
        if size >= g.n:
            break
        for combo in combinations(range(g.n), size):
            s = 0
            for v in combo:
                s |= 1 << v
            count += 1
            if not is_chordal_bipartite_in(g.adj, full & ~s):
                return _verdict("lemma3", count, {"removed": list(combo)})
    return _verdict("lemma3", count, None)


# --- the elimination lemma --------------------------------------------------------------

@dataclass(frozen=True)
class Lemma5Report:
    edge: Edge
    k: int
    U: int
    V: int
    S: int
    components: tuple[int, ...]
    items: tuple[bool, bool, bool, bool, bool]
    witnesses: dict[int, Any]
    # U and V meeting one component is recorded, not judged
    same_component_meets: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return all(self.items)

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict[str, Any]:
        return {
            "edge": list(self.edge),
            "k": self.k,
            "U": as_list(self.U),
            "V": as_list(self.V),
            "S": as_list(self.S),
            "components": [as_list(f) for f in self.components],
            "items": list(self.items),
            "witnesses": {str(i): w for i, w in self.witnesses.items()},
            "same_component_meets": list(self.same_component_meets),
        }


def _lemma5_items(g: Graph, u: int, v: int, s: int, k: int) -> Lemma5Report:
    adj = g.adj
    U = adj[u] & ~(1 << v)
    V = adj[v] & ~(1 << u)
    rest = g.all_vertices & ~((1 << u) | (1 << v)) & ~s
    comps = tuple(components_in(adj, rest))
    witnesses: dict[int, Any] = {}

    item1 = U.bit_count() >= k - 1 and V.bit_count() >= k - 1
    if not item1:
        witnesses[1] = {"U_size": U.bit_count(), "V_size": V.bit_count()}

    item2 = is_complete_bipartite_between(g, U, V)
    if not item2:
        for x in bits(U):
            missing = V & ~adj[x]
            if missing:
                witnesses[2] = {"non_edge": [x, as_list(missing)[0]]}
                break

    item3 = True
    for i, fi in enumerate(comps):
        for j, fj in enumerate(comps):
            if i != j and U & fi and V & fj:
                item3 = False
                witnesses[3] = {"F_i": as_list(fi), "F_j": as_list(fj)}
                break
        if not item3:
            break
    same = tuple(i for i, f in enumerate(comps) if U & f and V & f)

    item4 = s.bit_count() >= k - 1
    if not item4:
        witnesses[4] = {"S_size": s.bit_count()}

    item5 = True
    if s.bit_count() == k - 1:
        left = U == s and not V & s and all(V & f for f in comps)
        right = V == s and not U & s and all(U & f for f in comps)
        item5 = left or right
        if not item5:
            witnesses[5] = {"U_is_S": U == s, "V_is_S": V == s}

    return Lemma5Report(Edge(u, v) if u < v else Edge(v, u), k, U, V, s, comps,
                        (item1, item2, item3, item4, item5), witnesses, same)


def check_lemma5(g: Graph, e: Sequence[int], s: int, *,
                 k: int | None = None, check_preconditions: bool = True) -> Lemma5Report:
    u, v = e
    if check_preconditions:
        if not is_chordal_bipartite(g):
            raise PreconditionError("not-chordal-bipartite")
        if g.n < 3:
            raise PreconditionError("too-small")
        if not g.has_edge(u, v):
            raise PreconditionError("not-an-edge")
        if not bisimplicial_in(g.adj, g.all_vertices, u, v):
            raise PreconditionError("not-bisimplicial")
        if s & ((1 << u) | (1 << v)) or s & ~g.all_vertices:
            raise PreconditionError("cut-overlaps-edge")
        within = g.all_vertices & ~((1 << u) | (1 << v))
        if not is_cut_in(g.adj, within, s):
            raise PreconditionError("not-a-cut", "S does not disconnect G ⊖ uv")
    if k is None:
        k = vertex_connectivity(g)
    if check_preconditions and k < 1:
        raise PreconditionError("kappa-zero")
    return _lemma5_items(g, u, v, s, k)


def sweep_lemma5(g: Graph, budget: int | None = None) -> Verdict:
    """Every bisimplicial edge and every cut of G ⊖ uv up to ``budget`` (default κ)."""
    if not is_chordal_bipartite(g):
        raise PreconditionError("not-chordal-bipartite")
    if g.n < 3:
        return _verdict("lemma5", 0, None)
    k = vertex_connectivity(g)
    if k < 1:
        raise PreconditionError("kappa-zero")
    s_max = k if budget is None else budget
    if s_max > MAX_CUT_ENUMERATION:
        raise BudgetError(f"cut budget {s_max} exceeds {MAX_CUT_ENUMERATION}")
    adj = g.adj
    count = 0
    same = 0
    for e in _bisimplicial_edges_in(adj, g.all_vertices):
        within = g.all_vertices & ~((1 << e.u) | (1 << e.v))
        for s in cuts_up_to_in(adj, within, s_max):
            count += 1
            rep = _lemma5_items(g, e.u, e.v, s, k)
            same += bool(rep.same_component_meets)
            if not rep.ok:
                return _verdict("lemma5", count, rep.to_json())
    return _verdict("lemma5", count, None, same_component_instances=same)


def check_lemma6(g: Graph, *, kappa: Callable[[Graph], int] = vertex_connectivity,
                 check_preconditions: bool = True) -> Verdict:
    """κ(G ⊖ uv) >= κ(G) - 1 for every bisimplicial edge uv."""
    if check_preconditions:
        if not is_chordal_bipartite(g):
            raise PreconditionError("not-chordal-bipartite")
    if g.n == 0:
        return _verdict("lemma6", 0, None)
    k = kappa(g)
    if check_preconditions and k < 1:
        raise PreconditionError("kappa-zero")
    count = 0
    for e in _bisimplicial_edges_in(g.adj, g.all_vertices):
        if g.n - 2 <= 1:
            continue
        count += 1
        k_rest = kappa(remove_vertices(g, (1 << e.u) | (1 << e.v)))
        if k_rest < k - 1:
            return _verdict("lemma6", count, {"edge": list(e), "kappa": k,
                                              "kappa_rest": k_rest})
    return _verdict("lemma6", count, None)


# --- the inductive step's internal claims -------------------------------------------------

def check_proof_claims(g: Graph, check_preconditions: bool = True) -> Verdict:
    """The three internal claims for the case where eliminating a bisimplicial edge leaves κ = 1.

    For every bisimplicial ``uv`` with κ(G ⊖ uv) = 1 and every cut vertex
    ``s`` of G ⊖ uv with N(v) - u = {s} (both orientations tried):

    (a) u has a neighbour in every component of G ⊖ uv - s;
    (b) every s-component of G ⊖ uv is connected without a cut vertex;
    (c) G - v is 2-connected.

    (b) accepts a single edge ``{s, w}`` as an s-component: such blocks occur
    already in K(2,3) and the argument only needs the absence of a cut vertex.
    How many s-components were single edges is reported in ``detail``.
    """
    adj = g.adj
    full = g.all_vertices
    if check_preconditions:
        if not is_chordal_bipartite(g):
            raise PreconditionError("not-chordal-bipartite")
        if g.n == 0 or connectivity_in(adj, full) != 2:
            raise PreconditionError("kappa-not-two")
    count = 0
    edge_blocks = 0
    for e in _bisimplicial_edges_in(adj, full):
        h = full & ~((1 << e.u) | (1 << e.v))
        if not h or connectivity_in(adj, h) != 1:
            continue
        for s in bits(cut_vertices_in(adj, h)):
            for u, v in ((e.u, e.v), (e.v, e.u)):
                if adj[v] & ~(1 << u) != 1 << s:
                    continue
                count += 1
                where = {"edge": [u, v], "s": s}
                comps = components_in(adj, h & ~(1 << s))
                for f in comps:
                    if not adj[u] & f:
                        return _verdict("claims", count,
                                        dict(where, claim="a", component=as_list(f)))
                for f in comps:
                    block = f | (1 << s)
                    if block.bit_count() == 2:
                        edge_blocks += 1
                        if not is_connected_in(adj, block):
                            return _verdict("claims", count,
                                            dict(where, claim="b", component=as_list(f)))
                    elif not is_biconnected_in(adj, block):
                        return _verdict("claims", count,
                                        dict(where, claim="b", component=as_list(f)))
                if not is_biconnected_in(adj, full & ~(1 << v)):
                    return _verdict("claims", count, dict(where, claim="c"))
    return _verdict("claims", count, None, single_edge_s_components=edge_blocks)


# --- all checkers at once ------------------------------------------------------------------

CHECKERS = ("theorem", "lemma1", "lemma3", "lemma5", "lemma6", "claims")


def run_checker(name: str, g: Graph) -> dict[str, Any]:
    """One JSON-ready verdict; inputs outside a checker's hypotheses are vacuous."""
    if name == "theorem":
        bv = check_theorem(g)
        return {"checker": "theorem",
                "status": "vacuous" if bv.vacuous else ("pass" if bv.satisfied else "fail"),
                "n": bv.n, "m": bv.m, "kappa": bv.kappa, "bound": bv.bound}
    try:
        if name == "lemma1":
            v = sweep_lemma1(g)
        elif name == "lemma3":
            v = check_lemma3(g)
        elif name == "lemma5":
            v = sweep_lemma5(g)
        elif name == "lemma6":
            v = check_lemma6(g)
        elif name == "claims":
            v = check_proof_claims(g)
        else:
            raise ValueError(f"unknown checker {name!r}")
    except PreconditionError as exc:
        return {"checker": name, "status": "vacuous", "instances": 0,
                "witness": None, "precondition": exc.code}
    return v.to_json()


__all__ = [
    "BoundVerdict", "CHECKERS", "Lemma5Report", "PreconditionError", "Status",
    "Verdict", "check_lemma1", "check_lemma3", "check_lemma5", "check_lemma6",
    "check_proof_claims", "check_theorem", "conjecture_lower", "run_checker",
    "sweep_lemma1", "sweep_lemma5", "theorem_bound",
]

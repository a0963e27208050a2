"""Value-semantics multigraphs with identified edges.

Vertices and edge identifiers are opaque strings.  Parallel edges are
distinct entries with equal endpoint pairs; a loop stores the same vertex
twice.  All operations are pure and return new graphs.
"""

from __future__ import annotations

import dataclasses
from collections.abc import Iterable, Mapping
from typing import Dict, FrozenSet, List, Tuple


def _fresh_name(base: str, taken) -> str:
    name = base
    while name in taken:
        name += "'"
    return name


@dataclasses.dataclass(frozen=True)
class Multigraph:
    """Undirected multigraph; loops contribute 2 to the degree."""

    vertices: FrozenSet[str]
    edges: Dict[str, Tuple[str, str]]

    def __post_init__(self):
        norm = {}
        for eid, ends in self.edges.items():
            u, v = ends
            if u not in self.vertices or v not in self.vertices:
                raise ValueError(f"edge {eid!r} has endpoint outside the vertex set")
            norm[eid] = (u, v) if u <= v else (v, u)
        object.__setattr__(self, "edges", norm)

    @classmethod
    def build(cls, vertices: Iterable[str], edges: Mapping[str, Tuple[str, str]]) -> "Multigraph":
        return cls(frozenset(vertices), dict(edges))

    # -- basic queries -------------------------------------------------

    def ends(self, eid: str) -> Tuple[str, str]:
        return self.edges[eid]

    def is_loop(self, eid: str) -> bool:
        u, v = self.edges[eid]
        return u == v

    def num_edges(self) -> int:
        return len(self.edges)

    def incident(self, v: str) -> List[str]:
        """Edge ids touching v (loops listed once), sorted."""
        if v not in self.vertices:
            raise ValueError(f"unknown vertex {v!r}")
        return sorted(e for e, (a, b) in self.edges.items() if a == v or b == v)

    def degree(self, v: str) -> int:
        if v not in self.vertices:
            raise ValueError(f"unknown vertex {v!r}")
        d = 0
        for a, b in self.edges.values():
            if a == v:
                d += 1
            if b == v:
                d += 1
        return d

    def neighbors(self, v: str) -> FrozenSet[str]:
        """Vertices joined to v by a non-loop edge."""
        if v not in self.vertices:
            raise ValueError(f"unknown vertex {v!r}")
        out = set()
        for a, b in self.edges.values():
            if a == v and b != v:
                out.add(b)
            elif b == v and a != v:
                out.add(a)
        return frozenset(out)

    def boundary(self, X: Iterable[str]) -> FrozenSet[str]:
        """delta(X): non-loop edges with exactly one endpoint in X."""
        X = frozenset(X)
        unknown = X - self.vertices
        if unknown:
            raise ValueError(f"boundary of unknown vertices: {sorted(unknown)}")
        return frozenset(
            e for e, (a, b) in self.edges.items() if (a in X) != (b in X)
        )

    def adjacency(self) -> Dict[str, List[Tuple[str, str]]]:
        """vertex -> sorted list of (edge id, other endpoint); loops appear once."""
        adj: Dict[str, List[Tuple[str, str]]] = {v: [] for v in self.vertices}
        for e in sorted(self.edges):
            a, b = self.edges[e]
            adj[a].append((e, b))
            if b != a:
                adj[b].append((e, a))
        return adj

    # -- derived graphs ------------------------------------------------

    def induced(self, X: Iterable[str]) -> "Multigraph":
        X = frozenset(X)
        unknown = X - self.vertices
        if unknown:
            raise ValueError(f"induced on unknown vertices: {sorted(unknown)}")
        return Multigraph(
            X, {e: ab for e, ab in self.edges.items() if ab[0] in X and ab[1] in X}
        )

    def without_vertices(self, X: Iterable[str]) -> "Multigraph":
        return self.induced(self.vertices - frozenset(X))

    def without_edges(self, K: Iterable[str]) -> "Multigraph":
        K = frozenset(K)
        return Multigraph(self.vertices, {e: ab for e, ab in self.edges.items() if e not in K})


# -- rewriting operations ---------------------------------------------


def consolidate(G: Multigraph, X: Iterable[str], name: str | None = None) -> Multigraph:
    """Identify X to a single fresh vertex; edges inside X (future loops) die.

    The fresh name defaults to a deterministic encoding of sorted(X), so
    repeated runs produce identical graphs.
    """
    X = frozenset(X)
    if not X:
        raise ValueError("cannot consolidate an empty vertex set")
    unknown = X - G.vertices
    if unknown:
        raise ValueError(f"consolidate of unknown vertices: {sorted(unknown)}")
    rest = G.vertices - X
    if name is None:
        name = "(" + "+".join(sorted(X)) + ")"
    vx = _fresh_name(name, rest)
    edges = {}
    for e, (a, b) in G.edges.items():
        ina, inb = a in X, b in X
        if ina and inb:
            continue
        edges[e] = (vx if ina else a, vx if inb else b)
    return Multigraph(rest | {vx}, edges)


def _lift_pivot(G: Multigraph, e: str, f: str, pivot: str | None) -> str:
    ea, eb = G.ends(e)
    fa, fb = G.ends(f)
    shared = {ea, eb} & {fa, fb}
    if not shared:
        raise ValueError(f"edges {e!r} and {f!r} are not incident")
    if len(shared) == 2 and pivot is None:
        raise ValueError(
            f"edges {e!r} and {f!r} share both endpoints; name the pivot explicitly"
        )
    if pivot is None:
        (pivot,) = shared
    elif pivot not in shared:
        raise ValueError(f"{pivot!r} is not a shared endpoint of {e!r} and {f!r}")
    return pivot


def lift(G: Multigraph, e: str, f: str, pivot: str | None = None) -> Multigraph:
    """Replace incident edges e = uv, f = vw by a single edge uw.

    Loops cannot be lifted.  When e and f are parallel, the pivot vertex
    must be named by the caller; the result is then a loop at the other
    endpoint.
    """
    if e == f:
        raise ValueError("lift needs two distinct edges")
    for eid in (e, f):
        if eid not in G.edges:
            raise ValueError(f"unknown edge {eid!r}")
        if G.is_loop(eid):
            raise ValueError(f"cannot lift the loop {eid!r}")
    v = _lift_pivot(G, e, f, pivot)
    ea, eb = G.ends(e)
    fa, fb = G.ends(f)
    u = ea if eb == v else eb
    w = fa if fb == v else fb
    edges = {k: ab for k, ab in G.edges.items() if k not in (e, f)}
    new_id = _fresh_name(f"{e}*{f}", edges.keys())
    edges[new_id] = (u, w)
    return Multigraph(G.vertices, edges)


def split_off_vertex(
    G: Multigraph, v: str, pairing: Iterable[Tuple[str, str]]
) -> Multigraph:
    """Lift each pair of the pairing at v, then delete v and its leftovers."""
    if v not in G.vertices:
        raise ValueError(f"unknown vertex {v!r}")
    pairing = list(pairing)
    seen = set()
    for e, f in pairing:
        for eid in (e, f):
            if eid not in G.edges:
                raise ValueError(f"unknown edge {eid!r}")
            if v not in G.ends(eid):
                raise ValueError(f"edge {eid!r} is not incident with {v!r}")
            if G.is_loop(eid):
                raise ValueError(f"loop {eid!r} cannot take part in a splitting")
            if eid in seen:
                raise ValueError(f"edge {eid!r} appears in two pairs")
            seen.add(eid)
        if e == f:
            raise ValueError("a pair must consist of two distinct edges")
    H = G
    for e, f in pairing:
        H = lift(H, e, f, pivot=v)
    return H.without_vertices({v})


def is_separation(G: Multigraph, X: Iterable[str], Y: Iterable[str]) -> bool:
    """True iff (X, Y) is a separation: non-empty, disjoint, covering, no
    edge crossing between the sides."""
    X, Y = frozenset(X), frozenset(Y)
    if not X or not Y:
        return False
    if X & Y:
        return False
    if X | Y != G.vertices:
        return False
    for a, b in G.edges.values():
        if (a in X) != (b in X):
            return False
    return True

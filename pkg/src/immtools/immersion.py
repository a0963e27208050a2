"""Weak and strong immersions: certificates, verification, exhaustive
search, and the star-minor-to-immersion construction.

The searcher backtracks over injective branch-vertex assignments (pattern
vertices in descending degree order) and then routes pattern edges one at
a time, enumerating every simple path (or cycle, for loops) over the
still-unused host edges.  "Absent" is reported only after the whole space
is exhausted; the optional budget caps the number of search steps.
"""

from __future__ import annotations

import dataclasses
from typing import Dict, FrozenSet, Iterator, List, Optional, Set, Tuple

from .flow import INF, FlowNetwork
from .multigraph import Multigraph
from .simplegraph import StarMinorModel

FOUND = "found"
ABSENT = "absent"
BUDGET = "budget"


@dataclasses.dataclass(frozen=True)
class ImmersionCertificate:
    vertex_map: Dict[str, str]
    edge_map: Dict[str, FrozenSet[str]]
    strong: bool


@dataclasses.dataclass(frozen=True)
class SearchResult:
    status: str
    certificate: Optional[ImmersionCertificate] = None


# -- verification -----------------------------------------------------


def _edge_subgraph_vertices(G: Multigraph, edge_ids) -> Set[str]:
    verts: Set[str] = set()
    for e in edge_ids:
        a, b = G.ends(e)
        verts.add(a)
        verts.add(b)
    return verts


def _edge_set_connected(G: Multigraph, edge_ids) -> bool:
    edge_ids = set(edge_ids)
    if not edge_ids:
        return True
    verts = _edge_subgraph_vertices(G, edge_ids)
    start = next(iter(verts))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for e in edge_ids:
            a, b = G.ends(e)
            if a == v and b not in seen:
                seen.add(b)
                stack.append(b)
            elif b == v and a not in seen:
                seen.add(a)
                stack.append(a)
    return seen == verts


def _has_cycle_through(G: Multigraph, edge_ids, v: str) -> bool:
    edge_ids = set(edge_ids)
    for e in edge_ids:
        a, b = G.ends(e)
        if a == b == v:
            return True
    # a non-loop cycle through v: leave v by one edge, return by a different one
    for first in sorted(edge_ids):
        a, b = G.ends(first)
        if v not in (a, b) or a == b:
            continue
        start = b if a == v else a
        # DFS back to v avoiding the first edge and revisits
        stack = [(start, {start}, {first})]
        while stack:
            cur, seen, used = stack.pop()
            for e in edge_ids - used:
                x, y = G.ends(e)
                if x == y:
                    continue
                if cur not in (x, y):
                    continue
                nxt = y if x == cur else x
                if nxt == v:
                    return True
                if nxt not in seen:
                    stack.append((nxt, seen | {nxt}, used | {e}))
    return False


def verify_immersion(
    G: Multigraph,
    H: Multigraph,
    cert: ImmersionCertificate,
    strong: Optional[bool] = None,
) -> List[str]:
    """Empty list on accept; otherwise one message per violated condition.

    References to nonexistent vertices or edges raise ValueError.
    """
    if strong is None:
        strong = cert.strong
    vm, em = cert.vertex_map, cert.edge_map
    if set(vm) != H.vertices:
        raise ValueError("vertex_map keys do not match the pattern's vertices")
    if set(em) != set(H.edges):
        raise ValueError("edge_map keys do not match the pattern's edges")
    for hv, gv in vm.items():
        if gv not in G.vertices:
            raise ValueError(f"vertex_map sends {hv!r} to unknown vertex {gv!r}")
    for he, ge in em.items():
        for e in ge:
            if e not in G.edges:
                raise ValueError(f"edge_map of {he!r} references unknown edge {e!r}")

    violations: List[str] = []
    images: Dict[str, List[str]] = {}
    for hv, gv in vm.items():
        images.setdefault(gv, []).append(hv)
    for gv, hvs in sorted(images.items()):
        if len(hvs) > 1:
            violations.append(
                f"vertex_map not injective: {sorted(hvs)} all map to {gv!r}"
            )

    claimed: Dict[str, str] = {}
    for he in sorted(em):
        for e in sorted(em[he]):
            if e in claimed:
                violations.append(
                    f"edges {claimed[e]!r} and {he!r} share host edge {e!r}"
                )
            else:
                claimed[e] = he

    for he in sorted(H.edges):
        hu, hv = H.ends(he)
        edge_ids = em[he]
        spanned = _edge_subgraph_vertices(G, edge_ids)
        if hu == hv:
            if not _has_cycle_through(G, edge_ids, vm[hu]):
                violations.append(
                    f"loop {he!r}: image contains no cycle through {vm[hu]!r}"
                )
        else:
            if vm[hu] not in spanned or vm[hv] not in spanned:
                violations.append(
                    f"edge {he!r}: image misses an endpoint image"
                )
        if not _edge_set_connected(G, edge_ids):
            violations.append(f"edge {he!r}: image is not connected")
        if strong:
            ends = {hu, hv}
            for hw in sorted(H.vertices - ends):
                if vm[hw] in spanned:
                    violations.append(
                        f"edge {he!r}: image contains branch vertex {vm[hw]!r}"
                        f" (= image of non-incident {hw!r})"
                    )
    return violations


# -- exhaustive search ------------------------------------------------


class _BudgetExhausted(Exception):
    pass


class _Searcher:
    def __init__(self, G: Multigraph, H: Multigraph, strong: bool, budget: Optional[int]):
        self.G = G
        self.H = H
        self.strong = strong
        self.steps_left = budget if budget is not None else -1
        self.gadj = G.adjacency()
        self.hdeg = {v: H.degree(v) for v in H.vertices}
        self.gdeg = {v: G.degree(v) for v in G.vertices}
        self.horder = sorted(H.vertices, key=lambda v: (-self.hdeg[v], v))
        self.hedges = sorted(H.edges)
        self.assign: Dict[str, str] = {}
        self.used_g: Set[str] = set()
        self.avail: Set[str] = set(G.edges)
        self.routes: Dict[str, Tuple[str, ...]] = {}

    def tick(self) -> None:
        if self.steps_left == 0:
            raise _BudgetExhausted
        if self.steps_left > 0:
            self.steps_left -= 1

    def run(self) -> Optional[ImmersionCertificate]:
        if len(self.H.vertices) > len(self.G.vertices):
            return None
        if len(self.H.edges) > len(self.G.edges):
            return None
        if self._assign(0):
            return ImmersionCertificate(
                vertex_map=dict(self.assign),
                edge_map={e: frozenset(r) for e, r in self.routes.items()},
                strong=self.strong,
            )
        return None

    def _assign(self, i: int) -> bool:
        self.tick()
        if i == len(self.horder):
            return self._route(0)
        hv = self.horder[i]
        need = self.hdeg[hv]
        for gv in sorted(self.G.vertices - self.used_g):
            if self.gdeg[gv] < need:
                continue
            self.assign[hv] = gv
            self.used_g.add(gv)
            if self._assign(i + 1):
                return True
            del self.assign[hv]
            self.used_g.discard(gv)
        return False

    def _route(self, j: int) -> bool:
        self.tick()
        if j == len(self.hedges):
            return True
        he = self.hedges[j]
        hu, hv = self.H.ends(he)
        if self.strong:
            forbidden = {self.assign[w] for w in self.H.vertices if w not in (hu, hv)}
        else:
            forbidden = set()
        if hu == hv:
            gen = self._cycles(self.assign[hu], forbidden)
        else:
            gen = self._paths(self.assign[hu], self.assign[hv], forbidden)
        for route in gen:
            self.avail.difference_update(route)
            self.routes[he] = route
            if self._route(j + 1):
                return True
            del self.routes[he]
            self.avail.update(route)
        return False

    def _paths(
        self, x: str, y: str, forbidden: Set[str]
    ) -> Iterator[Tuple[str, ...]]:
        """All simple x-y paths over available edges, interiors avoiding
        the forbidden vertex set."""
        path: List[str] = []
        visited = {x}

        def step(cur: str) -> Iterator[Tuple[str, ...]]:
            self.tick()
            for e, nb in self.gadj[cur]:
                if e not in self.avail or e in path or nb == cur:
                    continue
                if nb == y:
                    path.append(e)
                    yield tuple(path)
                    path.pop()
                elif nb not in visited and nb not in forbidden:
                    path.append(e)
                    visited.add(nb)
                    yield from step(nb)
                    visited.discard(nb)
                    path.pop()

        return step(x)

    def _cycles(self, x: str, forbidden: Set[str]) -> Iterator[Tuple[str, ...]]:
        """All cycles through x over available edges: a loop at x, or a
        closed simple walk with distinct edges and interior vertices."""
        for e, nb in self.gadj[x]:
            if nb == x and e in self.avail:
                yield (e,)
        path: List[str] = []
        visited: Set[str] = set()

        def step(cur: str) -> Iterator[Tuple[str, ...]]:
            self.tick()
            for e, nb in self.gadj[cur]:
                if e not in self.avail or e in path or nb == cur:
                    continue
                if nb == x:
                    if len(path) >= 1:
                        path.append(e)
                        yield tuple(path)
                        path.pop()
                elif nb not in visited and nb not in forbidden:
                    path.append(e)
                    visited.add(nb)
                    yield from step(nb)
                    visited.discard(nb)
                    path.pop()

        yield from step(x)


def find_immersion(
    G: Multigraph,
    H: Multigraph,
    strong: bool = False,
    budget: Optional[int] = None,
) -> SearchResult:
    """Exhaustive immersion search; certificates always re-verify."""
    searcher = _Searcher(G, H, strong, budget)
    try:
        cert = searcher.run()
    except _BudgetExhausted:
        return SearchResult(status=BUDGET)
    if cert is None:
        return SearchResult(status=ABSENT)
    assert not verify_immersion(G, H, cert, strong), "searcher emitted a bad certificate"
    return SearchResult(status=FOUND, certificate=cert)


# -- star minor to immersion ------------------------------------------


def star_minor_to_immersion(
    G: Multigraph,
    W,
    m: int,
    model: StarMinorModel,
    F: Multigraph,
) -> ImmersionCertificate:
    """Turn a star minor of the auxiliary graph into a strong immersion of F.

    Pattern vertices map to the first |V(F)| leaves; 2|E(F)| edge-disjoint
    leaf-to-center paths are extracted by a single flow computation (leaf z
    supplying one path per half-edge at its pattern vertex, with transit
    through used leaves blocked); half-edges pair off with the paths and
    each pattern edge becomes the union of its two paths.
    """
    from .pathdecomp import build_auxiliary_graph

    W = frozenset(W)
    if m < 2 * len(F.edges):
        raise ValueError("m must be at least twice the pattern's edge count")
    aux = build_auxiliary_graph(G, W, m)
    bad = model.violations(aux)
    if bad:
        raise ValueError("invalid star minor model: " + "; ".join(bad))
    leaves = sorted(model.leaves)
    fverts = sorted(F.vertices)
    if len(leaves) < len(fverts):
        raise ValueError("model has fewer leaves than the pattern has vertices")
    theta = dict(zip(fverts, leaves))
    center = model.center

    demand: Dict[str, int] = {}
    half_edges: Dict[str, List[str]] = {v: [] for v in fverts}
    for e in sorted(F.edges):
        u, v = F.ends(e)
        half_edges[u].append(e)
        half_edges[v].append(e)  # loops contribute two half-edges at u == v
    for v in fverts:
        demand[theta[v]] = len(half_edges[v])

    used_leaves = {theta[v] for v in fverts}
    net = FlowNetwork()
    for v in sorted(G.vertices):
        net.add_node(("in", v))
        net.add_node(("out", v))
        if v == center or v in used_leaves:
            transit = 0
        else:
            transit = INF
        net.add_arc(("in", v), ("out", v), transit)
    for e in sorted(G.edges):
        a, b = G.edges[e]
        if a == b:
            continue
        net.add_undirected_between(
            ("out", a), ("in", b), ("out", b), ("in", a), 1, label=e
        )
    src, snk = ("super", "s"), ("super", "t")
    for z in sorted(used_leaves):
        net.add_arc(src, ("out", z), demand[z])
    net.add_arc(("in", center), snk, INF)

    total = 2 * len(F.edges)
    value = net.max_flow(src, snk)
    if value < total:
        raise ValueError(
            f"only {value} of {total} leaf-to-center paths exist;"
            " m is too small or the model is wrong"
        )
    arc_paths = net.extract_paths(src, snk)
    by_leaf: Dict[str, List[List[str]]] = {z: [] for z in used_leaves}
    for arcs in arc_paths:
        leaf = net.head[arcs[0]][1]  # first arc is super-source -> ("out", z)
        edge_ids = [net.label[i] for i in arcs if net.label[i] is not None]
        by_leaf[leaf].append(edge_ids)

    assignment: Dict[Tuple[str, int], List[str]] = {}
    for v in fverts:
        paths = by_leaf[theta[v]]
        if len(paths) != len(half_edges[v]):
            raise ValueError("path extraction does not match the half-edge counts")
        for k, path in enumerate(paths):
            assignment[(v, k)] = path

    edge_map: Dict[str, FrozenSet[str]] = {}
    slot: Dict[str, int] = {v: 0 for v in fverts}
    for e in sorted(F.edges):
        u, v = F.ends(e)
        pu = assignment[(u, slot[u])]
        slot[u] += 1
        pv = assignment[(v, slot[v])]
        slot[v] += 1
        edge_map[e] = frozenset(pu) | frozenset(pv)

    cert = ImmersionCertificate(vertex_map=theta, edge_map=edge_map, strong=True)
    bad = verify_immersion(G, F, cert, strong=True)
    if bad:
        raise ValueError("construction produced an invalid certificate: " + "; ".join(bad))
    return cert

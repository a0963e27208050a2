"""Path-like decompositions and linearity certificates: the data model,
the verifier, the pairwise-connectivity auxiliary graph, star-minor and
linearizing-set search, and the decomposition algorithm built from nested
minimal separators."""

from __future__ import annotations

import dataclasses
import itertools
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from .connectivity import CutWitness, max_flow_min_cut, min_cut_min_source_side
from .multigraph import Multigraph
from .simplegraph import SimpleGraph, StarMinorModel

SMALL_CUT = "small-cut"
STAR_MINOR = "star-minor"
NOT_PATH_SHAPED = "not-path-shaped"

_SUBSET_SEARCH_LIMIT = 16


@dataclasses.dataclass(frozen=True)
class PathLikeDecomposition:
    """Ordering x_1..x_t of X plus a near-partition B_0..B_t of V(G) - X."""

    ordering: Tuple[str, ...]
    bags: Tuple[FrozenSet[str], ...]

    def violations(self, G: Multigraph, X: Iterable[str]) -> List[str]:
        X = frozenset(X)
        out = []
        if len(self.bags) != len(self.ordering) + 1:
            out.append(
                f"{len(self.ordering)} ordering vertices need"
                f" {len(self.ordering) + 1} bags, got {len(self.bags)}"
            )
        if len(set(self.ordering)) != len(self.ordering):
            out.append("ordering repeats a vertex")
        if set(self.ordering) != X:
            out.append("ordering is not exactly the decomposed vertex set")
        seen: Dict[str, int] = {}
        for i, bag in enumerate(self.bags):
            for v in bag:
                if v in seen:
                    out.append(f"bags {seen[v]} and {i} both contain {v!r}")
                else:
                    seen[v] = i
        covered = frozenset(seen)
        if covered & set(self.ordering):
            out.append("a bag contains an ordering vertex")
        expected = G.vertices - X
        if covered != expected:
            missing = expected - covered
            extra = covered - expected
            if missing:
                out.append(f"bags miss vertices: {sorted(missing)}")
            if extra:
                out.append(f"bags contain foreign vertices: {sorted(extra)}")
        return out


@dataclasses.dataclass(frozen=True)
class LinearityCertificate:
    A: FrozenSet[str]
    decomposition: PathLikeDecomposition
    achieved_a: int
    achieved_w: int
    achieved_p: int


@dataclasses.dataclass(frozen=True)
class FailureWitness:
    kind: str  # SMALL_CUT, STAR_MINOR or NOT_PATH_SHAPED
    payload: object


# -- decomposition measurements ---------------------------------------


def xi_cut(G: Multigraph, P: PathLikeDecomposition, i: int) -> FrozenSet[str]:
    """Edges crossing the prefix/suffix split around x_i (1-based)."""
    t = len(P.ordering)
    if not 1 <= i <= t:
        raise ValueError(f"index {i} out of range 1..{t}")
    left = set(P.ordering[: i - 1])
    for bag in P.bags[:i]:
        left |= bag
    right = set(P.ordering[i:])
    for bag in P.bags[i:]:
        right |= bag
    return frozenset(
        e
        for e, (a, b) in G.edges.items()
        if (a in left and b in right) or (b in left and a in right)
    )


def width(G: Multigraph, P: PathLikeDecomposition) -> int:
    t = len(P.ordering)
    if t == 0:
        return 0
    return max(len(xi_cut(G, P, i)) for i in range(1, t + 1))


def boundedness(G: Multigraph, P: PathLikeDecomposition, Z: Iterable[str]) -> int:
    Z = frozenset(Z)
    hit_bags = sum(1 for bag in P.bags if bag & Z)
    return len(Z & set(P.ordering)) + hit_bags


def is_p_bounded(G: Multigraph, P: PathLikeDecomposition, Z: Iterable[str], p: int) -> bool:
    return boundedness(G, P, Z) <= p


def verify_linear_certificate(
    G: Multigraph,
    W: Iterable[str],
    cert: LinearityCertificate,
    a: int,
    w: int,
    p: int,
) -> List[str]:
    """Checks |A| <= a, a valid decomposition of G - A w.r.t. W - A of width
    strictly below w, and p-bounded neighborhoods for every vertex of A."""
    W = frozenset(W)
    out = []
    if not cert.A <= W:
        out.append(f"A is not a subset of W: {sorted(cert.A - W)}")
    if len(cert.A) > a:
        out.append(f"|A| = {len(cert.A)} exceeds a = {a}")
    if not cert.A <= G.vertices:
        out.append(f"A contains unknown vertices: {sorted(cert.A - G.vertices)}")
        return out
    reduced = G.without_vertices(cert.A)
    out.extend(cert.decomposition.violations(reduced, W - cert.A))
    if out:
        return out
    got_w = width(reduced, cert.decomposition)
    if got_w >= w:
        out.append(f"width {got_w} is not less than w = {w}")
    for v in sorted(cert.A):
        Z = G.neighbors(v) & reduced.vertices
        b = boundedness(reduced, cert.decomposition, Z)
        if b > p:
            out.append(f"neighborhood of {v!r} has boundedness {b} > p = {p}")
    return out


# -- auxiliary graph and its structure --------------------------------


def build_auxiliary_graph(G: Multigraph, W: Iterable[str], m: int) -> SimpleGraph:
    """Simple graph on W: x ~ y iff G - (W - {x, y}) has >= m edge-disjoint
    x-y paths."""
    W = frozenset(W)
    unknown = W - G.vertices
    if unknown:
        raise ValueError(f"unknown vertices in W: {sorted(unknown)}")
    if m < 1:
        raise ValueError("m must be at least 1")
    edges = []
    for x, y in itertools.combinations(sorted(W), 2):
        reduced = G.without_vertices(W - {x, y})
        if max_flow_min_cut(reduced, {x}, {y}).value >= m:
            edges.append((x, y))
    return SimpleGraph.build(W, edges)


def has_k1k_minor(H: SimpleGraph, k: int) -> Union[StarMinorModel, bool]:
    """A K_{1,k} minor model (as a subtree with k leaves and a non-leaf
    vertex) or False after exhaustive search over connected center sets."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if len(H.vertices) > _SUBSET_SEARCH_LIMIT:
        raise ValueError("instance above configured size limit")
    verts = sorted(H.vertices)
    for size in range(1, len(verts) + 1):
        for combo in itertools.combinations(verts, size):
            C = frozenset(combo)
            sub = SimpleGraph(C, frozenset(e for e in H.edges if e <= C))
            if not sub.is_connected():
                continue
            outside = frozenset().union(
                *(H.neighbors(v) for v in C)
            ) - C
            if len(outside) >= k:
                return _star_model(H, C, sorted(outside)[:k])
    return False


def _star_model(H: SimpleGraph, C: FrozenSet[str], leaf_list: List[str]) -> StarMinorModel:
    # spanning tree of H[C] plus one pendant edge per designated leaf,
    # pruned so the designated leaves are exactly the tree's leaves
    tree_edges = set()
    seen = {min(C)}
    frontier = [min(C)]
    adj = H.adjacency()
    while frontier:
        v = frontier.pop()
        for u in adj[v]:
            if u in C and u not in seen:
                seen.add(u)
                tree_edges.add(frozenset((v, u)))
                frontier.append(u)
    nodes = set(C)
    for leaf in leaf_list:
        anchor = min(u for u in adj[leaf] if u in C)
        tree_edges.add(frozenset((leaf, anchor)))
        nodes.add(leaf)
    designated = set(leaf_list)
    while True:
        tree = SimpleGraph(frozenset(nodes), frozenset(tree_edges))
        prune = sorted(
            v for v in nodes if tree.degree(v) <= 1 and v not in designated
        )
        if not prune:
            break
        v = prune[0]
        nodes.discard(v)
        tree_edges = {e for e in tree_edges if v not in e}
    tree = SimpleGraph(frozenset(nodes), frozenset(tree_edges))
    center = min(v for v in nodes if v not in tree.leaves())
    return StarMinorModel(center=center, leaves=frozenset(designated), tree=tree)


def min_linearizing_set(H: SimpleGraph) -> FrozenSet[str]:
    """Smallest X with H - X a disjoint union of paths, by increasing-size
    subset enumeration (first hit in lexicographic order)."""
    if len(H.vertices) > _SUBSET_SEARCH_LIMIT:
        raise ValueError("instance above configured size limit")
    verts = sorted(H.vertices)
    for size in range(len(verts) + 1):
        for combo in itertools.combinations(verts, size):
            if H.without(combo).is_disjoint_union_of_paths():
                return frozenset(combo)
    raise AssertionError("removing every vertex always leaves a path union")


# -- the decomposition algorithm --------------------------------------


def compute_separator(
    G: Multigraph,
    A: Iterable[str],
    ordering: Sequence[str],
    i: int,
) -> Tuple[FrozenSet[str], int]:
    """The i-separator L_i of minimum crossing cost, then of minimum size.

    Realized as the inclusion-minimal min cut in G - A - x_i between the
    consolidated ordering prefix and suffix; edges at x_i never count.
    """
    A = frozenset(A)
    t = len(ordering)
    if not 2 <= i <= t - 1:
        raise ValueError(f"index {i} out of range 2..{t - 1}")
    xi = ordering[i - 1]
    prefix = frozenset(ordering[: i - 1])
    suffix = frozenset(ordering[i:])
    reduced = G.without_vertices(A | {xi})
    witness = min_cut_min_source_side(reduced, prefix, suffix)
    return witness.source_side, witness.value


def _component_ordering(H_minus_A: SimpleGraph) -> List[str]:
    """Concatenate the path components, ascending by smallest vertex, each
    walked from its smaller endpoint."""
    ordering: List[str] = []
    comps = sorted(H_minus_A.connected_components(), key=min)
    adj = H_minus_A.adjacency()
    for comp in comps:
        if len(comp) == 1:
            ordering.extend(comp)
            continue
        endpoints = sorted(v for v in comp if len(adj[v]) == 1)
        cur = endpoints[0]
        prev = None
        walk = [cur]
        while len(walk) < len(comp):
            nxt = next(u for u in adj[cur] if u != prev)
            prev, cur = cur, nxt
            walk.append(cur)
        ordering.extend(walk)
    return ordering


def linear_decompose(
    G: Multigraph,
    W: Iterable[str],
    m: int,
    w_limit: int,
) -> Union[LinearityCertificate, FailureWitness]:
    """Decompose G with respect to W via the auxiliary graph: delete a
    minimum linearizing set A, order W - A along the leftover paths, and
    cut the graph by nested minimal separators.

    Returns a small-cut witness when the auxiliary graph is disconnected or
    some separator cost reaches w_limit.
    """
    W = frozenset(W)
    if m < 1:
        raise ValueError("m must be at least 1")
    H = build_auxiliary_graph(G, W, m)
    comps = H.connected_components()
    if len(comps) > 1:
        X1 = comps[0]
        X2 = frozenset().union(*comps[1:])
        cut = max_flow_min_cut(G, X1, X2)
        return FailureWitness(kind=SMALL_CUT, payload=cut)

    A = min_linearizing_set(H)
    ordering = tuple(_component_ordering(H.without(A)))
    t = len(ordering)
    rest = G.vertices - A - set(ordering)

    if t == 0:
        bags = (frozenset(rest),)
    elif t == 1:
        bags = (frozenset(), frozenset(rest))
    elif t == 2:
        bags = (frozenset(), frozenset(rest), frozenset())
    else:
        seps: Dict[int, FrozenSet[str]] = {1: frozenset()}
        for i in range(2, t):
            L, cost = compute_separator(G, A, ordering, i)
            if cost >= w_limit:
                reduced = G.without_vertices(A | {ordering[i - 1]})
                witness = min_cut_min_source_side(
                    reduced, frozenset(ordering[: i - 1]), frozenset(ordering[i:])
                )
                return FailureWitness(kind=SMALL_CUT, payload=witness)
            seps[i] = L
        seps[t] = G.vertices - A - {ordering[t - 1]}
        bag_list = [frozenset()]
        for i in range(1, t):
            bag_list.append(seps[i + 1] - (seps[i] | {ordering[i - 1]}))
        bag_list.append(frozenset())
        bags = tuple(bag_list)

    decomposition = PathLikeDecomposition(ordering=ordering, bags=bags)
    reduced = G.without_vertices(A)
    achieved_w = width(reduced, decomposition) + 1
    achieved_p = 0
    for v in sorted(A):
        Z = G.neighbors(v) & reduced.vertices
        achieved_p = max(achieved_p, boundedness(reduced, decomposition, Z))
    cert = LinearityCertificate(
        A=A,
        decomposition=decomposition,
        achieved_a=len(A),
        achieved_w=achieved_w,
        achieved_p=achieved_p,
    )
    bad = verify_linear_certificate(G, W, cert, len(A), achieved_w, achieved_p)
    assert not bad, f"emitted certificate fails its own achieved values: {bad}"
    return cert

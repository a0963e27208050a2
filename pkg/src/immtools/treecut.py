"""Tree-cut decompositions: adhesion, torsos, edge sums, groundedness,
decomposition composition, alpha-basic testing and the recursive
structure algorithm that splits on small cuts between high-degree
vertices."""

from __future__ import annotations

import dataclasses
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple, Union

from .connectivity import CutWitness, is_k_edge_connected_set, max_flow_min_cut
from .multigraph import Multigraph, consolidate
from .pathdecomp import (
    NOT_PATH_SHAPED,
    SMALL_CUT,
    STAR_MINOR,
    FailureWitness,
    LinearityCertificate,
    PathLikeDecomposition,
    build_auxiliary_graph,
    has_k1k_minor,
    linear_decompose,
    verify_linear_certificate,
)
from .simplegraph import SimpleGraph


@dataclasses.dataclass(frozen=True)
class TreeCutDecomposition:
    tree_nodes: FrozenSet[str]
    tree_edges: FrozenSet[FrozenSet[str]]
    bags: Dict[str, FrozenSet[str]]

    def tree(self) -> SimpleGraph:
        return SimpleGraph(self.tree_nodes, self.tree_edges)

    def violations(self, G: Multigraph) -> List[str]:
        out = []
        if not self.tree_nodes:
            out.append("decomposition tree has no nodes")
            return out
        t = self.tree()
        if not t.is_tree():
            out.append("decomposition tree is not a tree")
        if set(self.bags) != set(self.tree_nodes):
            out.append("bag index set differs from the tree nodes")
            return out
        seen: Dict[str, str] = {}
        for n in sorted(self.bags):
            for v in self.bags[n]:
                if v in seen:
                    out.append(f"bags {seen[v]!r} and {n!r} both contain {v!r}")
                else:
                    seen[v] = n
        if frozenset(seen) != G.vertices:
            missing = G.vertices - frozenset(seen)
            extra = frozenset(seen) - G.vertices
            if missing:
                out.append(f"bags miss vertices: {sorted(missing)}")
            if extra:
                out.append(f"bags contain foreign vertices: {sorted(extra)}")
        return out


@dataclasses.dataclass(frozen=True)
class Torso:
    graph: Multigraph
    core: FrozenSet[str]
    peripheral: FrozenSet[str]


@dataclasses.dataclass(frozen=True)
class StructureDecomposition:
    decomposition: TreeCutDecomposition
    certificates: Dict[str, LinearityCertificate]


def _tree_side(D: TreeCutDecomposition, u: str, v: str) -> FrozenSet[str]:
    """Nodes of the component of T - uv containing v."""
    adj = D.tree().adjacency()
    comp = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if (x, y) in ((u, v), (v, u)):
                continue
            if y not in comp:
                comp.add(y)
                stack.append(y)
    return frozenset(comp)


def adhesion(G: Multigraph, D: TreeCutDecomposition) -> int:
    bad = D.violations(G)
    if bad:
        raise ValueError("malformed decomposition: " + "; ".join(bad))
    best = 0
    for e in D.tree_edges:
        u, v = sorted(e)
        side = frozenset().union(*(D.bags[n] for n in _tree_side(D, u, v)))
        best = max(best, len(G.boundary(side)))
    return best


def torso_at(G: Multigraph, D: TreeCutDecomposition, t: str) -> Torso:
    """Consolidate the bag union of each component of T - t to one
    peripheral vertex (named after the neighbor node it hangs off);
    component unions that are empty contribute nothing."""
    bad = D.violations(G)
    if bad:
        raise ValueError("malformed decomposition: " + "; ".join(bad))
    if t not in D.tree_nodes:
        raise ValueError(f"unknown tree node {t!r}")
    if len(D.tree_nodes) == 1:
        return Torso(graph=G, core=G.vertices, peripheral=frozenset())
    adj = D.tree().adjacency()
    graph = G
    peripheral = []
    for n in adj[t]:
        side = _tree_side(D, t, n)
        Z = frozenset().union(*(D.bags[x] for x in side))
        if not Z:
            continue
        before = graph.vertices
        graph = consolidate(graph, Z, name=f"peri:{n}")
        peripheral.extend(graph.vertices - before)
    core = D.bags[t]
    return Torso(graph=graph, core=core, peripheral=graph.vertices - core)


def edge_sum(
    G1: Multigraph,
    v1: str,
    G2: Multigraph,
    v2: str,
    pi: Mapping[str, str],
) -> Multigraph:
    """Glue G1 - v1 and G2 - v2 by matching the boundary edges of the two
    deleted degree-k vertices via the bijection pi."""
    for G, v in ((G1, v1), (G2, v2)):
        if v not in G.vertices:
            raise ValueError(f"unknown vertex {v!r}")
        if any(G.is_loop(e) for e in G.incident(v)):
            raise ValueError(f"{v!r} carries a loop; edge sums require loop-free ends")
    d1 = frozenset(G1.incident(v1))
    d2 = frozenset(G2.incident(v2))
    k = len(d1)
    if k < 1 or len(d2) != k:
        raise ValueError(f"degree mismatch: |delta(v1)| = {k}, |delta(v2)| = {len(d2)}")
    if set(pi) != d1 or set(pi.values()) != d2 or len(set(pi.values())) != k:
        raise ValueError("pi is not a bijection from delta(v1) to delta(v2)")
    A = G1.without_vertices({v1})
    B = G2.without_vertices({v2})
    if A.vertices & B.vertices:
        raise ValueError(
            f"summand vertex sets overlap: {sorted(A.vertices & B.vertices)}"
        )
    if set(A.edges) & set(B.edges):
        raise ValueError(
            f"summand edge ids overlap: {sorted(set(A.edges) & set(B.edges))}"
        )
    edges = dict(A.edges)
    edges.update(B.edges)
    for e1 in sorted(d1):
        e2 = pi[e1]
        a, b = G1.ends(e1)
        x = b if a == v1 else a
        c, d = G2.ends(e2)
        y = d if c == v2 else c
        new_id = f"{e1}~{e2}"
        while new_id in edges:
            new_id += "'"
        edges[new_id] = (x, y)
    return Multigraph(A.vertices | B.vertices, edges)


def is_grounded(G1: Multigraph, v1: str, G2: Multigraph, v2: str) -> bool:
    """True iff each summand links its glue vertex to some other vertex by
    deg-many edge-disjoint paths."""
    for G, v in ((G1, v1), (G2, v2)):
        if v not in G.vertices:
            raise ValueError(f"unknown vertex {v!r}")
        if any(G.is_loop(e) for e in G.incident(v)):
            raise ValueError(f"{v!r} carries a loop")
        k = G.degree(v)
        if k < 1:
            raise ValueError(f"{v!r} has degree 0")
        ok = False
        for other in sorted(G.vertices - {v}):
            if max_flow_min_cut(G, {v}, {other}).value >= k:
                ok = True
                break
        if not ok:
            return False
    return True


def compose_decompositions(
    G1: Multigraph,
    D1: TreeCutDecomposition,
    G2: Multigraph,
    D2: TreeCutDecomposition,
    v1: str,
    v2: str,
    pi: Optional[Mapping[str, str]] = None,
) -> TreeCutDecomposition:
    """Decomposition of G1 (+)_k G2: join the trees by an edge between the
    nodes owning v1 and v2, and drop the glued vertices from their bags.

    The bags do not depend on the edge bijection; pi is accepted so callers
    can keep the full edge-sum data together, and is validated when given.
    """
    bad = D1.violations(G1) + D2.violations(G2)
    if bad:
        raise ValueError("malformed decomposition: " + "; ".join(bad))
    if pi is not None:
        edge_sum(G1, v1, G2, v2, pi)  # precondition check only
    owner1 = next(n for n in sorted(D1.bags) if v1 in D1.bags[n])
    owner2 = next(n for n in sorted(D2.bags) if v2 in D2.bags[n])
    nodes = {f"1:{n}" for n in D1.tree_nodes} | {f"2:{n}" for n in D2.tree_nodes}
    edges = (
        {frozenset((f"1:{a}", f"1:{b}")) for a, b in map(sorted, D1.tree_edges)}
        | {frozenset((f"2:{a}", f"2:{b}")) for a, b in map(sorted, D2.tree_edges)}
        | {frozenset((f"1:{owner1}", f"2:{owner2}"))}
    )
    bags = {f"1:{n}": bag - {v1} for n, bag in D1.bags.items()}
    bags.update({f"2:{n}": bag - {v2} for n, bag in D2.bags.items()})
    return TreeCutDecomposition(
        tree_nodes=frozenset(nodes), tree_edges=frozenset(edges), bags=bags
    )


def _join_disjoint(D1: TreeCutDecomposition, D2: TreeCutDecomposition) -> TreeCutDecomposition:
    """Join decompositions of vertex-disjoint graphs by an arbitrary tree
    edge (the zero-order analogue of composition)."""
    a = f"1:{min(D1.tree_nodes)}"
    b = f"2:{min(D2.tree_nodes)}"
    nodes = {f"1:{n}" for n in D1.tree_nodes} | {f"2:{n}" for n in D2.tree_nodes}
    edges = (
        {frozenset((f"1:{x}", f"1:{y}")) for x, y in map(sorted, D1.tree_edges)}
        | {frozenset((f"2:{x}", f"2:{y}")) for x, y in map(sorted, D2.tree_edges)}
        | {frozenset((a, b))}
    )
    bags = {f"1:{n}": bag for n, bag in D1.bags.items()}
    bags.update({f"2:{n}": bag for n, bag in D2.bags.items()})
    return TreeCutDecomposition(
        tree_nodes=frozenset(nodes), tree_edges=frozenset(edges), bags=bags
    )


def is_alpha_basic(
    H: Multigraph, alpha: int, m: int = 1
) -> Union[LinearityCertificate, FailureWitness]:
    """Certify that the set of degree->=alpha vertices of H is alpha-linear,
    via the auxiliary-graph decomposition with thresholds a = w = p = alpha.

    m tunes the auxiliary graph only; the default of 1 keeps it as connected
    as possible so the certificate search is as permissive as the algorithm
    allows.
    """
    if alpha < 1:
        raise ValueError("alpha must be positive")
    W = frozenset(v for v in H.vertices if H.degree(v) >= alpha)
    result = linear_decompose(H, W, m=m, w_limit=alpha)
    if isinstance(result, FailureWitness):
        return result
    bad = verify_linear_certificate(H, W, result, alpha, alpha, alpha)
    if not bad:
        return result
    aux = build_auxiliary_graph(H, W, m)
    if len(result.A) > alpha:
        # a linearizing set above 4k forces a K_{1,k} minor of the
        # auxiliary graph; surface the largest such star
        k_max = (len(result.A) - 1) // 4
        if k_max >= 2:
            model = has_k1k_minor(aux, k_max)
            if model is not False:
                return FailureWitness(kind=STAR_MINOR, payload=model)
    detail = {
        "violations": bad,
        "auxiliary_components": [sorted(c) for c in aux.connected_components()],
        "achieved": {
            "a": result.achieved_a,
            "w": result.achieved_w,
            "p": result.achieved_p,
        },
    }
    return FailureWitness(kind=NOT_PATH_SHAPED, payload=detail)


def structure_decompose(
    G: Multigraph, alpha: int
) -> Union[StructureDecomposition, FailureWitness]:
    """Split recursively on minimum cuts below alpha between high-degree
    vertices, stitch the parts' decompositions together, and certify every
    torso of the result as alpha-basic."""
    if alpha < 1:
        raise ValueError("alpha must be positive")
    D = _structure_tree(G, alpha)
    assert adhesion(G, D) < alpha
    certs: Dict[str, LinearityCertificate] = {}
    for t in sorted(D.tree_nodes):
        torso = torso_at(G, D, t)
        outcome = is_alpha_basic(torso.graph, alpha)
        if isinstance(outcome, FailureWitness):
            return outcome
        certs[t] = outcome
    return StructureDecomposition(decomposition=D, certificates=certs)


def _structure_tree(G: Multigraph, alpha: int) -> TreeCutDecomposition:
    high = frozenset(v for v in G.vertices if G.degree(v) >= alpha)
    witness = is_k_edge_connected_set(G, high, alpha)
    if witness is True:
        return TreeCutDecomposition(
            tree_nodes=frozenset({"n"}),
            tree_edges=frozenset(),
            bags={"n": G.vertices},
        )
    assert isinstance(witness, CutWitness)
    X = witness.source_side
    k = witness.value
    if k == 0:
        GX = G.induced(X)
        GY = G.without_vertices(X)
        assert GX.num_edges() < G.num_edges() and GY.num_edges() < G.num_edges()
        return _join_disjoint(_structure_tree(GX, alpha), _structure_tree(GY, alpha))
    vy = "cut:(" + "+".join(sorted(G.vertices - X)) + ")"
    vx = "cut:(" + "+".join(sorted(X)) + ")"
    GX = consolidate(G, G.vertices - X, name=vy)
    GY = consolidate(G, X, name=vx)
    assert GX.num_edges() < G.num_edges() and GY.num_edges() < G.num_edges(), (
        "splitting on the witness cut must shed edges on both sides"
    )
    assert is_grounded(GX, vy, GY, vx), "minimum-order witness cut must be grounded"
    DX = _structure_tree(GX, alpha)
    DY = _structure_tree(GY, alpha)
    return compose_decompositions(GX, DX, GY, DY, vy, vx)


def verify_structure(
    G: Multigraph,
    D: TreeCutDecomposition,
    certs: Mapping[str, LinearityCertificate],
    alpha: int,
) -> List[str]:
    """Near-partition validity, adhesion strictly below alpha, and one
    accepted alpha-basic certificate per torso."""
    out = D.violations(G)
    if out:
        return out
    a = adhesion(G, D)
    if a >= alpha:
        out.append(f"adhesion {a} is not less than alpha = {alpha}")
    if set(certs) != set(D.tree_nodes):
        out.append("certificate index set differs from the tree nodes")
        return out
    for t in sorted(D.tree_nodes):
        torso = torso_at(G, D, t)
        W = frozenset(v for v in torso.graph.vertices if torso.graph.degree(v) >= alpha)
        bad = verify_linear_certificate(torso.graph, W, certs[t], alpha, alpha, alpha)
        for msg in bad:
            out.append(f"torso at {t!r}: {msg}")
    return out

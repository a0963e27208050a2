"""JSON wire formats for every artifact the command line reads or emits.

Encoders return plain dicts; decoders validate shape and raise ValueError
with a human-readable message on malformed input.  All list output is
sorted so serialization is byte-stable for a fixed input.
"""

from __future__ import annotations

from typing import Any, Dict, List, Mapping

from .connectivity import CutWitness
from .immersion import ImmersionCertificate
from .multigraph import Multigraph
from .pathdecomp import (
    SMALL_CUT,
    STAR_MINOR,
    FailureWitness,
    LinearityCertificate,
    PathLikeDecomposition,
)
from .simplegraph import SimpleGraph, StarMinorModel
from .treecut import StructureDecomposition, Torso, TreeCutDecomposition


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def _str_list(obj: Any, what: str) -> List[str]:
    _expect(isinstance(obj, list) and all(isinstance(x, str) for x in obj),
            f"{what} must be a list of strings")
    return list(obj)


# -- multigraphs --------------------------------------------------------------

def graph_to_json(G: Multigraph) -> Dict[str, Any]:
    return {
        "vertices": sorted(G.vertices),
        "edges": [
            {"id": e, "ends": list(G.edges[e])} for e in sorted(G.edges)
        ],
    }


def graph_from_json(obj: Any) -> Multigraph:
    _expect(isinstance(obj, dict), "graph must be a JSON object")
    vertices = _str_list(obj.get("vertices"), '"vertices"')
    raw_edges = obj.get("edges")
    _expect(isinstance(raw_edges, list), '"edges" must be a list')
    vs = frozenset(vertices)
    _expect(len(vertices) == len(vs), "duplicate vertex names")
    edges: Dict[str, tuple] = {}
    for item in raw_edges:
        _expect(isinstance(item, dict) and isinstance(item.get("id"), str),
                'each edge needs a string "id"')
        eid = item["id"]
        _expect(eid not in edges, f"duplicate edge id {eid!r}")
        ends = item.get("ends")
        _expect(isinstance(ends, list) and len(ends) == 2
                and all(isinstance(x, str) for x in ends),
                f'edge {eid!r} needs "ends": [u, v]')
        _expect(ends[0] in vs and ends[1] in vs,
                f"edge {eid!r} has an unknown endpoint")
        edges[eid] = (ends[0], ends[1])
    return Multigraph(vs, edges)


# -- cut witnesses ------------------------------------------------------------

def cut_witness_to_json(w: CutWitness) -> Dict[str, Any]:
    return {
        "value": w.value,
        "cut": sorted(w.cut_edges),
        "source_side": sorted(w.source_side),
    }


def cut_witness_from_json(obj: Any) -> CutWitness:
    _expect(isinstance(obj, dict) and isinstance(obj.get("value"), int),
            'cut witness needs an integer "value"')
    return CutWitness(
        value=obj["value"],
        cut_edges=frozenset(_str_list(obj.get("cut"), '"cut"')),
        source_side=frozenset(_str_list(obj.get("source_side"), '"source_side"')),
    )


# -- immersion certificates ---------------------------------------------------

def immersion_to_json(cert: ImmersionCertificate) -> Dict[str, Any]:
    return {
        "vertex_map": {v: cert.vertex_map[v] for v in sorted(cert.vertex_map)},
        "edge_map": {e: sorted(cert.edge_map[e]) for e in sorted(cert.edge_map)},
        "strong": cert.strong,
    }


def immersion_from_json(obj: Any) -> ImmersionCertificate:
    _expect(isinstance(obj, dict), "certificate must be a JSON object")
    vm = obj.get("vertex_map")
    em = obj.get("edge_map")
    _expect(isinstance(vm, dict) and all(
        isinstance(k, str) and isinstance(v, str) for k, v in vm.items()),
        '"vertex_map" must map strings to strings')
    _expect(isinstance(em, dict), '"edge_map" must be an object')
    edge_map = {
        k: frozenset(_str_list(v, f'edge image for {k!r}')) for k, v in em.items()
    }
    _expect(isinstance(obj.get("strong"), bool), '"strong" must be a boolean')
    return ImmersionCertificate(
        vertex_map=dict(vm), edge_map=edge_map, strong=obj["strong"]
    )


# -- linearity certificates and failure witnesses -----------------------------

def linearity_to_json(cert: LinearityCertificate) -> Dict[str, Any]:
    return {
        "A": sorted(cert.A),
        "ordering": list(cert.decomposition.ordering),
        "bags": [sorted(b) for b in cert.decomposition.bags],
        "achieved": {
            "a": cert.achieved_a,
            "w": cert.achieved_w,
            "p": cert.achieved_p,
        },
    }


def linearity_from_json(obj: Any) -> LinearityCertificate:
    _expect(isinstance(obj, dict), "certificate must be a JSON object")
    A = frozenset(_str_list(obj.get("A"), '"A"'))
    ordering = tuple(_str_list(obj.get("ordering"), '"ordering"'))
    raw_bags = obj.get("bags")
    _expect(isinstance(raw_bags, list), '"bags" must be a list of lists')
    bags = tuple(frozenset(_str_list(b, "bag")) for b in raw_bags)
    ach = obj.get("achieved")
    _expect(isinstance(ach, dict) and all(
        isinstance(ach.get(k), int) for k in ("a", "w", "p")),
        '"achieved" needs integer fields a, w, p')
    return LinearityCertificate(
        A=A,
        decomposition=PathLikeDecomposition(ordering=ordering, bags=bags),
        achieved_a=ach["a"],
        achieved_w=ach["w"],
        achieved_p=ach["p"],
    )


def _star_model_to_json(model: StarMinorModel) -> Dict[str, Any]:
    return {
        "center": model.center,
        "leaves": sorted(model.leaves),
        "tree": {
            "nodes": sorted(model.tree.vertices),
            "edges": sorted(sorted(e) for e in model.tree.edges),
        },
    }


def _star_model_from_json(obj: Any) -> StarMinorModel:
    _expect(isinstance(obj, dict) and isinstance(obj.get("center"), str),
            'star model needs a string "center"')
    tree = obj.get("tree")
    _expect(isinstance(tree, dict), 'star model needs a "tree" object')
    nodes = _str_list(tree.get("nodes"), '"nodes"')
    raw = tree.get("edges")
    _expect(isinstance(raw, list), '"edges" must be a list of pairs')
    edges = frozenset(
        frozenset(_str_list(e, "tree edge")) for e in raw
    )
    return StarMinorModel(
        center=obj["center"],
        leaves=frozenset(_str_list(obj.get("leaves"), '"leaves"')),
        tree=SimpleGraph(frozenset(nodes), edges),
    )


def failure_to_json(w: FailureWitness) -> Dict[str, Any]:
    if w.kind == SMALL_CUT:
        payload: Any = cut_witness_to_json(w.payload)
    elif w.kind == STAR_MINOR:
        payload = _star_model_to_json(w.payload)
    else:
        payload = w.payload
    return {"kind": w.kind, "payload": payload}


def failure_from_json(obj: Any) -> FailureWitness:
    _expect(isinstance(obj, dict) and isinstance(obj.get("kind"), str),
            'failure witness needs a string "kind"')
    kind = obj["kind"]
    payload = obj.get("payload")
    if kind == SMALL_CUT:
        payload = cut_witness_from_json(payload)
    elif kind == STAR_MINOR:
        payload = _star_model_from_json(payload)
    return FailureWitness(kind=kind, payload=payload)


# -- tree-cut decompositions --------------------------------------------------

def treecut_to_json(D: TreeCutDecomposition) -> Dict[str, Any]:
    return {
        "tree": {
            "nodes": sorted(D.tree_nodes),
            "edges": sorted(sorted(e) for e in D.tree_edges),
        },
        "bags": {n: sorted(D.bags[n]) for n in sorted(D.bags)},
    }


def treecut_from_json(obj: Any) -> TreeCutDecomposition:
    _expect(isinstance(obj, dict), "decomposition must be a JSON object")
    tree = obj.get("tree")
    _expect(isinstance(tree, dict), 'decomposition needs a "tree" object')
    nodes = _str_list(tree.get("nodes"), '"nodes"')
    raw = tree.get("edges")
    _expect(isinstance(raw, list), '"edges" must be a list of pairs')
    edges = set()
    for e in raw:
        pair = frozenset(_str_list(e, "tree edge"))
        _expect(len(pair) == 2, "tree edges must join two distinct nodes")
        edges.add(pair)
    bags_obj = obj.get("bags")
    _expect(isinstance(bags_obj, dict), '"bags" must be an object')
    bags = {
        n: frozenset(_str_list(b, f"bag at {n!r}")) for n, b in bags_obj.items()
    }
    return TreeCutDecomposition(
        tree_nodes=frozenset(nodes), tree_edges=frozenset(edges), bags=bags
    )


def torso_to_json(t: Torso) -> Dict[str, Any]:
    return {
        "graph": graph_to_json(t.graph),
        "core": sorted(t.core),
        "peripheral": sorted(t.peripheral),
    }


def structure_to_json(result: StructureDecomposition) -> Dict[str, Any]:
    return {
        "decomposition": treecut_to_json(result.decomposition),
        "certificates": {
            n: linearity_to_json(result.certificates[n])
            for n in sorted(result.certificates)
        },
    }


def structure_from_json(obj: Any) -> StructureDecomposition:
    _expect(isinstance(obj, dict), "structure result must be a JSON object")
    D = treecut_from_json(obj.get("decomposition"))
    certs_obj = obj.get("certificates")
    _expect(isinstance(certs_obj, dict), '"certificates" must be an object')
    certs = {n: linearity_from_json(c) for n, c in certs_obj.items()}
    return StructureDecomposition(decomposition=D, certificates=certs)

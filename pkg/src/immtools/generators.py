"""Multigraph families used as worked inputs: thickened paths, their
chorded variants, complete graphs, and a seeded random family."""

from __future__ import annotations

import itertools
import random
from typing import Dict, Tuple

from .multigraph import Multigraph


def gen_pk(k: int) -> Multigraph:
    """Path on k+1 vertices with every edge thickened to multiplicity k."""
    if k < 1:
        raise ValueError("k must be positive")
    vertices = frozenset(f"v{i}" for i in range(k + 1))
    edges: Dict[str, Tuple[str, str]] = {}
    for i in range(k):
        for c in range(k):
            edges[f"e{i}c{c}"] = (f"v{i}", f"v{i+1}")
    return Multigraph(vertices, edges)


def gen_pk_chorded(k: int) -> Multigraph:
    """gen_pk(k) plus a simple chord between each pair of vertices at
    distance two along the path."""
    if k < 2:
        raise ValueError("k must be at least 2")
    G = gen_pk(k)
    edges = dict(G.edges)
    for i in range(k - 1):
        edges[f"chord{i}"] = (f"v{i}", f"v{i+2}")
    return Multigraph(G.vertices, edges)


def gen_complete(n: int) -> Multigraph:
    """Simple complete graph on n vertices."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    vertices = frozenset(f"v{i}" for i in range(n))
    edges = {
        f"e{i}_{j}": (f"v{i}", f"v{j}")
        for i, j in itertools.combinations(range(n), 2)
    }
    return Multigraph(vertices, edges)


def gen_random_multigraph(
    n: int, edge_count: int, max_multiplicity: int, seed: int
) -> Multigraph:
    """Random multigraph (loops allowed) with exactly edge_count edges, at
    most max_multiplicity of them on any one vertex pair or loop site;
    identical seeds give identical graphs."""
    if n < 1:
        raise ValueError("need at least one vertex")
    if edge_count < 0:
        raise ValueError("edge_count must be nonnegative")
    if max_multiplicity < 1:
        raise ValueError("max_multiplicity must be positive")
    capacity = (n * (n + 1) // 2) * max_multiplicity
    if edge_count > capacity:
        raise ValueError(
            f"cannot place {edge_count} edges: capacity is {capacity} "
            f"for n={n}, max_multiplicity={max_multiplicity}"
        )
    rng = random.Random(seed)
    names = [f"v{i}" for i in range(n)]
    counts: Dict[Tuple[str, str], int] = {}
    edges: Dict[str, Tuple[str, str]] = {}
    for idx in range(edge_count):
        while True:
            u = rng.choice(names)
            v = rng.choice(names)
            pair = (u, v) if u <= v else (v, u)
            if counts.get(pair, 0) < max_multiplicity:
                break
        counts[pair] = counts.get(pair, 0) + 1
        edges[f"e{idx}"] = pair
    return Multigraph(frozenset(names), edges)

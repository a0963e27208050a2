"""Shared builders and checkers for the test suite."""

from __future__ import annotations

import random
from typing import Dict, Iterable, List, Sequence, Tuple

from immtools import Multigraph, SimpleGraph


def mg(vertices: Iterable[str], edges: Dict[str, str | Tuple[str, str]]) -> Multigraph:
    """Compact multigraph builder; edge endpoints may be given as a
    two-character string ("ab") or a pair."""
    parsed = {}
    for eid, ends in edges.items():
        if isinstance(ends, str):
            if len(ends) != 2:
                raise ValueError(f"endpoint shorthand must be 2 chars: {ends!r}")
            parsed[eid] = (ends[0], ends[1])
        else:
            parsed[eid] = tuple(ends)
    return Multigraph(frozenset(vertices), parsed)


def sg(vertices: Iterable[str], edges: Iterable[str | Tuple[str, str]]) -> SimpleGraph:
    pairs = []
    for e in edges:
        if isinstance(e, str):
            pairs.append((e[0], e[1]))
        else:
            pairs.append(tuple(e))
    return SimpleGraph.build(vertices, pairs)


def random_multigraph(
    rng: random.Random,
    max_n: int = 6,
    max_edges: int = 10,
    allow_loops: bool = True,
) -> Multigraph:
    """A small random multigraph for property tests, with its shape drawn
    from the given generator."""
    n = rng.randint(1, max_n)
    names = [f"v{i}" for i in range(n)]
    e = rng.randint(0, max_edges)
    edges = {}
    for idx in range(e):
        u = rng.choice(names)
        v = rng.choice(names)
        if u == v and (n > 1 and not allow_loops):
            v = rng.choice([x for x in names if x != u])
        if u == v and not allow_loops:
            continue
        edges[f"e{idx}"] = (u, v)
    return Multigraph(frozenset(names), edges)


def check_path(G: Multigraph, path: Sequence[str], sources, sinks) -> None:
    """Assert that a list of edge ids forms a walk from a source to a sink
    with no repeated edges."""
    assert path, "empty path"
    assert len(set(path)) == len(path), "path repeats an edge"
    sources = frozenset(sources)
    sinks = frozenset(sinks)
    a, b = G.ends(path[0])
    starts = {a, b} & sources
    assert starts, f"path does not start at a source: {path}"
    # walk forward from a source endpoint
    here = next(iter(starts))
    for eid in path:
        u, v = G.ends(eid)
        assert here in (u, v), f"edges {path} do not chain at {here!r}"
        here = v if here == u else u
    assert here in sinks, f"path ends at {here!r}, not a sink"


def all_min_cut_sides(G: Multigraph, S, T, value: int) -> List[frozenset]:
    """Every source side achieving the minimum cut value, by subset
    enumeration; intended for graphs with few vertices."""
    import itertools

    S = frozenset(S)
    T = frozenset(T)
    middle = sorted(G.vertices - S - T)
    sides = []
    for r in range(len(middle) + 1):
        for extra in itertools.combinations(middle, r):
            side = S | frozenset(extra)
            if len(G.boundary(side)) == value:
                sides.append(side)
    return sides

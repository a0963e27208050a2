"""Loop-free simple graphs (used for the pairwise-connectivity auxiliary
graph) and star-minor models over them."""

from __future__ import annotations

import dataclasses
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple


@dataclasses.dataclass(frozen=True)
class SimpleGraph:
    vertices: FrozenSet[str]
    edges: FrozenSet[FrozenSet[str]]

    def __post_init__(self):
        for e in self.edges:
            if len(e) != 2:
                raise ValueError(f"not a simple edge: {sorted(e)}")
            if not e <= self.vertices:
                raise ValueError(f"edge endpoint outside vertex set: {sorted(e)}")

    @classmethod
    def build(cls, vertices: Iterable[str], edges: Iterable[Tuple[str, str]]) -> "SimpleGraph":
        return cls(frozenset(vertices), frozenset(frozenset(e) for e in edges))

    def has_edge(self, u: str, v: str) -> bool:
        return frozenset((u, v)) in self.edges

    def adjacency(self) -> Dict[str, List[str]]:
        adj: Dict[str, List[str]] = {v: [] for v in self.vertices}
        for e in self.edges:
            u, v = sorted(e)
            adj[u].append(v)
            adj[v].append(u)
        for v in adj:
            adj[v].sort()
        return adj

    def neighbors(self, v: str) -> FrozenSet[str]:
        return frozenset(u for e in self.edges if v in e for u in e if u != v)

    def degree(self, v: str) -> int:
        return sum(1 for e in self.edges if v in e)

    def without(self, X: Iterable[str]) -> "SimpleGraph":
        X = frozenset(X)
        keep = self.vertices - X
        return SimpleGraph(keep, frozenset(e for e in self.edges if e <= keep))

    def connected_components(self) -> List[FrozenSet[str]]:
        adj = self.adjacency()
        seen: Set[str] = set()
        comps = []
        for start in sorted(self.vertices):
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                v = stack.pop()
                for u in adj[v]:
                    if u not in comp:
                        comp.add(u)
                        stack.append(u)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.vertices) <= 1 or len(self.connected_components()) == 1

    def is_disjoint_union_of_paths(self) -> bool:
        """Every component is a path (single vertices and the empty graph count)."""
        if any(self.degree(v) > 2 for v in self.vertices):
            return False
        # max degree <= 2 and acyclic <=> path union
        return len(self.edges) == len(self.vertices) - len(self.connected_components())

    def is_tree(self) -> bool:
        return (
            bool(self.vertices)
            and self.is_connected()
            and len(self.edges) == len(self.vertices) - 1
        )

    def leaves(self) -> FrozenSet[str]:
        return frozenset(v for v in self.vertices if self.degree(v) == 1)


@dataclasses.dataclass(frozen=True)
class StarMinorModel:
    """A subtree of the host with a designated non-leaf center; the leaves
    witness a K_{1,k} minor with k = len(leaves)."""

    center: str
    leaves: FrozenSet[str]
    tree: SimpleGraph

    def violations(self, host: SimpleGraph) -> List[str]:
        out = []
        if not self.tree.vertices <= host.vertices:
            out.append("model tree uses vertices outside the host")
        if not self.tree.edges <= host.edges:
            out.append("model tree uses edges outside the host")
        if not self.tree.is_tree():
            out.append("connecting subgraph is not a tree")
            return out
        if self.tree.leaves() != self.leaves:
            out.append("tree leaves differ from the designated leaf set")
        if self.center not in self.tree.vertices or self.center in self.tree.leaves():
            out.append("center is not a non-leaf vertex of the tree")
        return out

"""Unit-capacity max-flow core behind the connectivity queries.

Undirected multigraph edges are encoded as two opposite directed arcs
marked as partners.  After a max flow is computed, partner flows are
resolved during path extraction by splicing, so every undirected edge ends
up on at most one extracted path.  Augmentation is BFS shortest-path with
arcs visited in insertion order, which makes all results deterministic
when callers add arcs in sorted edge-id order.
"""

from __future__ import annotations

from collections import deque
from typing import Dict, Hashable, List, Optional, Tuple

INF = 10**9


class FlowNetwork:
    def __init__(self):
        self.adj: Dict[Hashable, List[int]] = {}
        self.head: List[Hashable] = []
        self.cap: List[int] = []
        self.flow: List[int] = []
        self.tail: List[Hashable] = []
        # arc index -> partner arc index for the opposite orientation of the
        # same undirected edge (None for plain directed arcs)
        self.partner: List[Optional[int]] = []
        # arc index -> caller label (e.g. multigraph edge id)
        self.label: List[Optional[str]] = []

    def add_node(self, n: Hashable) -> None:
        self.adj.setdefault(n, [])

    def _push_arc(self, u, v, cap, label) -> int:
        idx = len(self.head)
        self.tail.append(u)
        self.head.append(v)
        self.cap.append(cap)
        self.flow.append(0)
        self.partner.append(None)
        self.label.append(label)
        self.adj.setdefault(u, []).append(idx)
        return idx

    def add_arc(self, u, v, cap, label=None) -> int:
        """Directed arc with a zero-capacity residual companion at index+1."""
        i = self._push_arc(u, v, cap, label)
        self._push_arc(v, u, 0, label)
        return i

    def add_undirected(self, u, v, cap, label=None) -> Tuple[int, int]:
        """Undirected edge: opposite partner arcs sharing one unit of use."""
        i = self.add_arc(u, v, cap, label)
        j = self.add_arc(v, u, cap, label)
        self.partner[i] = j
        self.partner[j] = i
        return i, j

    def add_undirected_between(self, u1, v1, u2, v2, cap, label=None) -> Tuple[int, int]:
        """Partnered arcs u1->v1 and u2->v2 (split-vertex encodings)."""
        i = self.add_arc(u1, v1, cap, label)
        j = self.add_arc(u2, v2, cap, label)
        self.partner[i] = j
        self.partner[j] = i
        return i, j

    # -- residual helpers ---------------------------------------------

    def _residual(self, i: int) -> int:
        return self.cap[i] - self.flow[i]

    def _augment(self, source, sink) -> int:
        """One BFS round; returns the amount pushed (0 when done)."""
        prev_arc: Dict[Hashable, int] = {source: -1}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            if u == sink:
                break
            for i in self.adj[u]:
                v = self.head[i]
                if v not in prev_arc and self._residual(i) > 0:
                    prev_arc[v] = i
                    queue.append(v)
        if sink not in prev_arc:
            return 0
        # bottleneck
        amt = INF
        v = sink
        while v != source:
            i = prev_arc[v]
            amt = min(amt, self._residual(i))
            v = self.tail[i]
        v = sink
        while v != source:
            i = prev_arc[v]
            self.flow[i] += amt
            self.flow[i ^ 1] -= amt
            v = self.tail[i]
        return amt

    def max_flow(self, source, sink) -> int:
        self.add_node(source)
        self.add_node(sink)
        total = 0
        while True:
            pushed = self._augment(source, sink)
            if pushed == 0:
                return total
            total += pushed

    def residual_reachable(self, source) -> set:
        seen = {source}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for i in self.adj[u]:
                v = self.head[i]
                if v not in seen and self._residual(i) > 0:
                    seen.add(v)
                    queue.append(v)
        return seen

    # -- flow decomposition -------------------------------------------

    def extract_paths(self, source, sink) -> List[List[int]]:
        """Decompose the current flow into unit source->sink arc paths.

        Internal cycles on a walk are trimmed off, leftover circulations are
        dropped, and opposite uses of partnered arcs are spliced away, so the
        returned paths use each undirected edge at most once.
        """
        remaining = [max(f, 0) for f in self.flow]
        paths: List[List[int]] = []
        while True:
            walk: List[int] = []
            nodes: List[Hashable] = [source]
            node = source
            stuck = False
            while node != sink:
                chosen = None
                for i in self.adj[node]:
                    if self.cap[i] > 0 and remaining[i] > 0:
                        chosen = i
                        break
                if chosen is None:
                    stuck = True
                    break
                remaining[chosen] -= 1
                nxt = self.head[chosen]
                if nxt in nodes:
                    # trim the cycle; its flow stays consumed
                    p = nodes.index(nxt)
                    walk = walk[:p]
                    nodes = nodes[:p + 1]
                else:
                    walk.append(chosen)
                    nodes.append(nxt)
                node = nxt
            if stuck:
                break
            paths.append(walk)
        self._splice_partner_conflicts(paths)
        return [self._trim_cycles(p) for p in paths]

    def _nodes_of(self, path: List[int], start) -> List[Hashable]:
        nodes = [start]
        for arc in path:
            nodes.append(self.head[arc])
        return nodes

    def _trim_cycles(self, path: List[int]) -> List[int]:
        if not path:
            return path
        out: List[int] = []
        nodes: List[Hashable] = [self.tail[path[0]]]
        for arc in path:
            nxt = self.head[arc]
            if nxt in nodes:
                p = nodes.index(nxt)
                out = out[:p]
                nodes = nodes[:p + 1]
            else:
                out.append(arc)
                nodes.append(nxt)
        return out

    def _splice_partner_conflicts(self, paths: List[List[int]]) -> None:
        """Resolve pairs of paths using both orientations of one edge.

        The prefix of one path is rerouted onto the suffix of the other at
        the first node where the suffix passes the prefix's break point;
        each round strictly shrinks the total arc count, so this terminates.
        """
        while True:
            where: Dict[int, Tuple[int, int]] = {}
            conflict = None
            for pi, path in enumerate(paths):
                for pos, arc in enumerate(path):
                    where[arc] = (pi, pos)
                    p = self.partner[arc]
                    if p is not None and p in where:
                        conflict = (where[p], (pi, pos))
                        break
                if conflict:
                    break
            if not conflict:
                return
            (pa, ia), (pb, ib) = conflict
            a, b = paths[pa], paths[pb]
            nodes_b = self._nodes_of(b, self.tail[b[0]])
            cut_a = self.tail[a[ia]]
            q = next(k for k in range(ib + 1, len(nodes_b)) if nodes_b[k] == cut_a)
            new_a = a[:ia] + b[q:]
            if pa == pb:
                paths[pa] = new_a
                continue
            nodes_a = self._nodes_of(a, self.tail[a[0]])
            cut_b = self.tail[b[ib]]
            r = next(k for k in range(ia + 1, len(nodes_a)) if nodes_a[k] == cut_b)
            paths[pa] = new_a
            paths[pb] = b[:ib] + a[r:]

"""Integral max flow via shortest augmenting paths (Edmonds-Karp).

Determinism contract: arcs are explored in insertion order and callers
insert them in increasing id order, so every augmentation uses the
lexicographically least shortest path and repeated runs produce
identical flows.
"""

from __future__ import annotations

from collections import deque


class FlowNetwork:
    def __init__(self, num_nodes: int):
        self.num_nodes = num_nodes
        self.adj: list[list[int]] = [[] for _ in range(num_nodes)]
        # arc i and its reverse arc i^1 are stored adjacently
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, capacity: int) -> int:
        """Directed arc u -> v; returns the arc index for flow queries."""
        index = len(self.to)
        self.adj[u].append(index)
        self.to.append(v)
        self.cap.append(capacity)
        self.adj[v].append(index + 1)
        self.to.append(u)
        self.cap.append(0)
        return index

    def flow_on(self, arc_index: int) -> int:
        """Units pushed through the arc (its reverse arc's residual)."""
        return self.cap[arc_index + 1]

    def max_flow(self, source: int, sink: int) -> int:
        total = 0
        while True:
            parent_arc = [-1] * self.num_nodes
            parent_arc[source] = -2
            queue = deque([source])
            while queue and parent_arc[sink] == -1:
                u = queue.popleft()
                for ai in self.adj[u]:
                    v = self.to[ai]
                    if parent_arc[v] == -1 and self.cap[ai] > 0:
                        parent_arc[v] = ai
                        queue.append(v)
            if parent_arc[sink] == -1:
                return total
            bottleneck = None
            v = sink
            while v != source:
                ai = parent_arc[v]
                if bottleneck is None or self.cap[ai] < bottleneck:
                    bottleneck = self.cap[ai]
                v = self.to[ai ^ 1]
            v = sink
            while v != source:
                ai = parent_arc[v]
                self.cap[ai] -= bottleneck
                self.cap[ai ^ 1] += bottleneck
                v = self.to[ai ^ 1]
            total += bottleneck

    def source_side(self, source: int) -> set[int]:
        """Nodes reachable from the source in the residual network; after
        max_flow this is the source side of a minimum cut."""
        seen = {source}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for ai in self.adj[u]:
                v = self.to[ai]
                if v not in seen and self.cap[ai] > 0:
                    seen.add(v)
                    queue.append(v)
        return seen

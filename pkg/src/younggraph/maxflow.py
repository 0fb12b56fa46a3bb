"""Integer max-flow (Dinic) on small graphs, exact for arbitrary-size ints."""

from __future__ import annotations

from collections import deque


class FlowNetwork:
    """Directed network with integer capacities and residual bookkeeping."""

    def __init__(self, n_nodes: int):
        self.n = n_nodes
        self.to: list[int] = []
        self.cap: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(n_nodes)]

    def add_edge(self, u: int, v: int, capacity: int) -> int:
        """Add u -> v with the given capacity; returns the edge id for flow queries."""
        if capacity < 0:
            raise ValueError("capacity must be nonnegative")
        eid = len(self.to)
        self.to.append(v)
        self.cap.append(capacity)
        self.adj[u].append(eid)
        self.to.append(u)
        self.cap.append(0)
        self.adj[v].append(eid + 1)
        return eid

    def flow_on(self, eid: int) -> int:
        """Flow pushed through the edge added as `eid` (residual of its twin)."""
        return self.cap[eid ^ 1]

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        while True:
            level = self._bfs(s, t)
            if level is None:
                return total
            it = [0] * self.n
            while True:
                pushed = self._dfs(s, t, None, level, it)
                if pushed == 0:
                    break
                total += pushed

    def _bfs(self, s: int, t: int):
        level = [-1] * self.n
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for eid in self.adj[u]:
                v = self.to[eid]
                if self.cap[eid] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level if level[t] >= 0 else None

    def _dfs(self, u: int, t: int, limit, level, it) -> int:
        if u == t:
            assert limit is not None
            return limit
        while it[u] < len(self.adj[u]):
            eid = self.adj[u][it[u]]
            v = self.to[eid]
            if self.cap[eid] > 0 and level[v] == level[u] + 1:
                cap_here = self.cap[eid] if limit is None else min(limit, self.cap[eid])
                pushed = self._dfs(v, t, cap_here, level, it)
                if pushed > 0:
                    self.cap[eid] -= pushed
                    self.cap[eid ^ 1] += pushed
                    return pushed
            it[u] += 1
        return 0

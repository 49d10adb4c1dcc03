"""Unit-capacity max-flow primitives: counts of edge-disjoint and
internally-vertex-disjoint paths between a vertex pair, with a minimum-cut
certificate and an optional early-exit cap for all-pairs pruning.

Vertex mode uses the standard splitting transform (w -> w_in -> w_out with
capacity 1 on the internal arc) so the flow value counts internally
disjoint paths, which is what Menger-style vertex cuts require.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .graphs import DirectedGraph, GraphInputError


@dataclass(frozen=True)
class FlowAnswer:
    """Result of a single s-t computation.

    ``value`` is the disjoint-path count, ``cut`` the certifying minimum
    cut (edges in edge mode, vertices in vertex mode). When ``saturated``
    the search stopped at the caller's cap: value == cap and no cut is
    extracted.
    """

    value: int
    cut: Tuple
    saturated: bool


class _Dinic:
    """Blocking-flow max-flow on integer capacities, array-backed."""

    def __init__(self, n: int):
        self.n = n
        self.head: List[List[int]] = [[] for _ in range(n)]
        self.to: List[int] = []
        self.cap: List[int] = []

    def add_edge(self, u: int, v: int, c: int) -> int:
        eid = len(self.to)
        self.head[u].append(eid)
        self.to.append(v)
        self.cap.append(c)
        self.head[v].append(eid + 1)
        self.to.append(u)
        self.cap.append(0)
        return eid

    def _bfs(self, s: int, t: int) -> bool:
        self.level = [-1] * self.n
        self.level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for eid in self.head[u]:
                v = self.to[eid]
                if self.cap[eid] > 0 and self.level[v] < 0:
                    self.level[v] = self.level[u] + 1
                    queue.append(v)
        return self.level[t] >= 0

    def _augment(self, s: int, t: int, it: List[int]) -> int:
        # iterative DFS for one augmenting path in the level graph
        # (paths in the split graph can exceed Python's recursion limit)
        path: List[int] = []  # edge ids along the current path
        u = s
        while True:
            if u == t:
                pushed = min(self.cap[eid] for eid in path)
                for eid in path:
                    self.cap[eid] -= pushed
                    self.cap[eid ^ 1] += pushed
                return pushed
            head_u = self.head[u]
            advanced = False
            while it[u] < len(head_u):
                eid = head_u[it[u]]
                v = self.to[eid]
                if self.cap[eid] > 0 and self.level[v] == self.level[u] + 1:
                    path.append(eid)
                    u = v
                    advanced = True
                    break
                it[u] += 1
            if advanced:
                continue
            if not path:
                return 0
            self.level[u] = -1  # dead end; prune
            eid = path.pop()
            u = self.to[eid ^ 1]
            it[u] += 1

    def max_flow(self, s: int, t: int, cap: Optional[int] = None) -> Tuple[int, bool]:
        """Returns (value, saturated). Stops early once value reaches cap."""
        flow = 0
        if cap is not None and flow >= cap:
            return cap, True
        while self._bfs(s, t):
            it = [0] * self.n
            while True:
                pushed = self._augment(s, t, it)
                if pushed == 0:
                    break
                flow += pushed
                if cap is not None and flow >= cap:
                    return cap, True
        return flow, False

    def residual_reachable(self, s: int) -> List[bool]:
        seen = [False] * self.n
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for eid in self.head[u]:
                v = self.to[eid]
                if self.cap[eid] > 0 and not seen[v]:
                    seen[v] = True
                    queue.append(v)
        return seen


def edge_max_flow(
    g: DirectedGraph, s: int, t: int, cap: Optional[int] = None
) -> FlowAnswer:
    """Maximum number of pairwise edge-disjoint s->t paths.

    The cut is the set of original edges crossing the residual-reachable
    frontier from s (all saturated, by max-flow/min-cut).
    """
    _check_pair(g, s, t)
    dinic = _Dinic(g.n)
    arcs = []
    for u, v in g.sorted_edges():
        arcs.append(((u, v), dinic.add_edge(u, v, 1)))
    value, saturated = dinic.max_flow(s, t, cap)
    if saturated:
        return FlowAnswer(value=value, cut=(), saturated=True)
    seen = dinic.residual_reachable(s)
    cut = tuple(e for e, _ in arcs if seen[e[0]] and not seen[e[1]])
    return FlowAnswer(value=value, cut=cut, saturated=False)


def vertex_max_flow(
    g: DirectedGraph, s: int, t: int, cap: Optional[int] = None
) -> FlowAnswer:
    """Maximum number of internally-vertex-disjoint s->t paths.

    Requires that the edge (s, t) is absent; with a direct edge no
    separating vertex cut exists and the quantity is undefined.
    """
    _check_pair(g, s, t)
    if g.has_edge(s, t):
        raise GraphInputError(
            f"edge ({s}, {t}) present: no separating vertex cut exists"
        )
    n = g.n
    # split: vertex w -> nodes 2w (in) and 2w+1 (out)
    dinic = _Dinic(2 * n)
    for w in range(n):
        c = n if w in (s, t) else 1
        dinic.add_edge(2 * w, 2 * w + 1, c)
    for u, v in g.sorted_edges():
        # large capacity keeps the minimum cut on split arcs only
        dinic.add_edge(2 * u + 1, 2 * v, n)
    value, saturated = dinic.max_flow(2 * s + 1, 2 * t, cap)
    if saturated:
        return FlowAnswer(value=value, cut=(), saturated=True)
    seen = dinic.residual_reachable(2 * s + 1)
    cut = tuple(
        w for w in range(n) if w not in (s, t) and seen[2 * w] and not seen[2 * w + 1]
    )
    return FlowAnswer(value=value, cut=cut, saturated=False)


def _check_pair(g: DirectedGraph, s: int, t: int) -> None:
    if not (0 <= s < g.n and 0 <= t < g.n):
        raise GraphInputError(f"vertex pair ({s}, {t}) outside [0, {g.n})")
    if s == t:
        raise GraphInputError("source and sink must differ")

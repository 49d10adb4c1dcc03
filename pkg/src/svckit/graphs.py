"""Directed and undirected graph types plus the structural transforms
(underlying graph, doubling, deletion, induced subgraphs, basic stats)
that the rest of the toolkit builds on.

Graphs are simple (no self-loops, no parallel edges) and immutable after
construction, so they can be shared freely across threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Optional, Tuple


class GraphInputError(ValueError):
    """An argument is outside the operation's input domain."""


class PreconditionError(RuntimeError):
    """The graph does not satisfy the operation's precondition
    (typically: not strongly connected, or too small)."""


Edge = Tuple[int, int]


class DirectedGraph:
    """Simple digraph on dense vertex ids 0..n-1.

    Edges are ordered pairs; self-loops and duplicates are rejected at
    construction (ingestion drops them before getting here). Optional
    ``vertex_labels`` keeps external names for human-readable reports.
    """

    __slots__ = ("n", "edges", "vertex_labels", "_succ", "_pred", "_edgeset")

    def __init__(
        self,
        n: int,
        edges: Iterable[Edge],
        vertex_labels: Optional[Mapping[int, str]] = None,
    ):
        if n < 0:
            raise GraphInputError(f"vertex count must be non-negative, got {n}")
        edgeset = set()
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge {e!r} has endpoint outside [0, {n})")
            if u == v:
                raise GraphInputError(f"self-loop {e!r} not allowed")
            edgeset.add((u, v))
        self.n = n
        self.edges = frozenset(edgeset)
        if vertex_labels is not None:
            for k in vertex_labels:
                if not (0 <= k < n):
                    raise GraphInputError(f"label key {k} outside [0, {n})")
            self.vertex_labels: Optional[Dict[int, str]] = dict(vertex_labels)
        else:
            self.vertex_labels = None
        succ = [[] for _ in range(n)]
        pred = [[] for _ in range(n)]
        for u, v in edgeset:
            succ[u].append(v)
            pred[v].append(u)
        for lst in succ:
            lst.sort()
        for lst in pred:
            lst.sort()
        self._succ = succ
        self._pred = pred
        self._edgeset = edgeset

    @property
    def m(self) -> int:
        return len(self.edges)

    def successors(self, u: int):
        return self._succ[u]

    def predecessors(self, u: int):
        return self._pred[u]

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._edgeset

    def label(self, u: int) -> str:
        if self.vertex_labels is not None and u in self.vertex_labels:
            return self.vertex_labels[u]
        return str(u)

    def sorted_edges(self):
        return sorted(self.edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DirectedGraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.edges == other.edges
            and self.vertex_labels == other.vertex_labels
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"DirectedGraph(n={self.n}, m={self.m})"


class UndirectedGraph:
    """Simple undirected graph; edges stored as (min, max) pairs."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[Edge]):
        if n < 0:
            raise GraphInputError(f"vertex count must be non-negative, got {n}")
        edgeset = set()
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge {e!r} has endpoint outside [0, {n})")
            if u == v:
                raise GraphInputError(f"self-loop {e!r} not allowed")
            edgeset.add((min(u, v), max(u, v)))
        self.n = n
        self.edges = frozenset(edgeset)
        adj = [[] for _ in range(n)]
        for u, v in edgeset:
            adj[u].append(v)
            adj[v].append(u)
        for lst in adj:
            lst.sort()
        self._adj = adj

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, u: int):
        return self._adj[u]

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        seen = [False] * self.n
        seen[0] = True
        queue = deque([0])
        count = 1
        while queue:
            u = queue.popleft()
            for v in self._adj[u]:
                if not seen[v]:
                    seen[v] = True
                    count += 1
                    queue.append(v)
        return count == self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, UndirectedGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"UndirectedGraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class GraphStats:
    """Per-graph statistics. Degree min/max are underlying-undirected;
    in/out are directed. ``diameter`` is None when some ordered pair is
    unreachable (graph not strongly connected)."""

    n: int
    m: int
    min_degree: int
    max_degree: int
    min_in: int
    max_in: int
    min_out: int
    max_out: int
    diameter: Optional[int]


def underlying(g: DirectedGraph) -> UndirectedGraph:
    """U(g): keep an undirected edge wherever at least one arc exists."""
    return UndirectedGraph(g.n, g.edges)


def doubled(d: UndirectedGraph) -> DirectedGraph:
    """D(d): replace each undirected edge by two opposite arcs."""
    arcs = []
    for u, v in d.edges:
        arcs.append((u, v))
        arcs.append((v, u))
    return DirectedGraph(d.n, arcs)


def remove_vertices(
    g: DirectedGraph, s: Iterable[int]
) -> Tuple[DirectedGraph, Dict[int, int]]:
    """g - s. Returns the remapped graph and the old-id -> new-id map
    (decomposition bookkeeping needs it). Surviving ids keep their
    relative order."""
    sset = set(s)
    for v in sset:
        if not (0 <= v < g.n):
            raise GraphInputError(f"vertex {v} outside [0, {g.n})")
    keep = [v for v in range(g.n) if v not in sset]
    mapping = {old: new for new, old in enumerate(keep)}
    edges = [
        (mapping[u], mapping[v])
        for u, v in g.edges
        if u not in sset and v not in sset
    ]
    labels = None
    if g.vertex_labels is not None:
        labels = {mapping[v]: g.vertex_labels[v] for v in keep if v in g.vertex_labels}
    return DirectedGraph(len(keep), edges, labels), mapping


def remove_edges(g: DirectedGraph, s: Iterable[Edge]) -> DirectedGraph:
    """g - s for an edge set; vertex set unchanged."""
    sset = {tuple(e) for e in s}
    for e in sset:
        if e not in g.edges:
            raise GraphInputError(f"edge {e!r} not present in graph")
    return DirectedGraph(g.n, g.edges - sset, g.vertex_labels)


def induced(
    g: DirectedGraph, u: Iterable[int]
) -> Tuple[DirectedGraph, Dict[int, int]]:
    """g[u]: subgraph induced by vertex set u, with the old->new id map."""
    uset = set(u)
    for v in uset:
        if not (0 <= v < g.n):
            raise GraphInputError(f"vertex {v} outside [0, {g.n})")
    return remove_vertices(g, set(range(g.n)) - uset)


def _bfs_ecc(g: DirectedGraph, src: int) -> Optional[int]:
    # directed eccentricity of src, None if some vertex unreachable
    dist = [-1] * g.n
    dist[src] = 0
    queue = deque([src])
    seen = 1
    far = 0
    while queue:
        u = queue.popleft()
        for v in g._succ[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                far = max(far, dist[v])
                seen += 1
                queue.append(v)
    if seen < g.n:
        return None
    return far


def stats(g: DirectedGraph) -> GraphStats:
    """Degree summary plus directed diameter (None when not strongly
    connected). Underlying degrees are computed on U(g)."""
    und = underlying(g)
    if g.n == 0:
        return GraphStats(0, 0, 0, 0, 0, 0, 0, 0, None)
    udeg = [len(und.neighbors(v)) for v in range(g.n)]
    indeg = [len(g.predecessors(v)) for v in range(g.n)]
    outdeg = [len(g.successors(v)) for v in range(g.n)]
    diameter: Optional[int] = 0
    for v in range(g.n):
        ecc = _bfs_ecc(g, v)
        if ecc is None:
            diameter = None
            break
        diameter = max(diameter, ecc)
    return GraphStats(
        n=g.n,
        m=g.m,
        min_degree=min(udeg),
        max_degree=max(udeg),
        min_in=min(indeg),
        max_in=max(indeg),
        min_out=min(outdeg),
        max_out=max(outdeg),
        diameter=diameter,
    )

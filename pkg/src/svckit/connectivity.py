"""Strong vertex/edge connectivity of digraphs and exhaustive enumeration
of all minimum weakening sets.

sigma0 (strong vertex connectivity) is the minimum number of vertices
whose removal leaves a graph that is not strongly connected or has one
vertex; sigma1 (strong edge connectivity) is the edge analogue. Both are
computed from unit-capacity max-flow with aggressive pruning: a running
best value caps every flow, and the vertex case scans sources
Even-Tarjan style (any minimum cut of size k misses at least one of the
first k+1 vertices, so that many sources suffice).
"""

from __future__ import annotations

import itertools
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .graphs import (
    DirectedGraph,
    GraphInputError,
    GraphStats,
    PreconditionError,
    UndirectedGraph,
    doubled,
    remove_edges,
    remove_vertices,
    stats,
    underlying,
)
from .flow import edge_max_flow, vertex_max_flow
from .scc import is_strongly_connected, scc


@dataclass(frozen=True)
class WeakeningSet:
    """A certified minimum weakening set.

    ``members`` are vertex ids (kind="vertex") or edges (kind="edge");
    ``resulting_scc_sizes`` is the multiset of SCC sizes after removal,
    sorted descending.
    """

    kind: str
    members: Tuple
    resulting_scc_sizes: Tuple[int, ...]


class WitnessList(list):
    """List of WeakeningSet with a flag marking truncated enumeration."""

    capped: bool = False


@dataclass
class ConnectivityReport:
    sigma0: Optional[int]
    sigma1: Optional[int]
    zeta0_underlying: Optional[int]
    zeta1_underlying: Optional[int]
    vertex_witnesses: List[WeakeningSet]
    edge_witnesses: List[WeakeningSet]
    witness_counts: Optional[Tuple[int, int]]
    stats: GraphStats
    flags: List[str] = field(default_factory=list)
    component_reports: List["ConnectivityReport"] = field(default_factory=list)
    component_vertices: List[List[int]] = field(default_factory=list)


class EnumerationGuardError(RuntimeError):
    """Enumeration of size-k subsets was refused without explicit opt-in."""


class _RunningMin:
    """Thread-shared monotone minimum used as the pruning cap."""

    def __init__(self, value: int):
        self.value = value
        self._lock = threading.Lock()

    def offer(self, v: int) -> None:
        with self._lock:
            if v < self.value:
                self.value = v

    def get(self) -> int:
        return self.value


def _require_strong(g: DirectedGraph) -> None:
    if g.n < 2:
        raise PreconditionError(f"graph must have >= 2 vertices, got {g.n}")
    if not is_strongly_connected(g):
        raise PreconditionError("graph is not strongly connected")


def local_sigma(g: DirectedGraph, u: int, v: int) -> int:
    """min(MF(u,v), MF(v,u)) over internally-disjoint path counts; a
    direction with a direct edge contributes n-1 (no separating cut)."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphInputError(f"pair ({u}, {v}) outside [0, {g.n})")
    if u == v:
        raise GraphInputError("vertices must differ")
    _require_strong(g)
    return _local_sigma_unchecked(g, u, v)


def _local_sigma_unchecked(g: DirectedGraph, u: int, v: int) -> int:
    best = g.n - 1
    for a, b in ((u, v), (v, u)):
        if g.has_edge(a, b):
            continue
        ans = vertex_max_flow(g, a, b, cap=best)
        if not ans.saturated:
            best = min(best, ans.value)
    return best


def _vertex_upper_bound(g: DirectedGraph) -> int:
    # removing all out- (or in-) neighbours of v is a weakening set
    # whenever at least 2 vertices survive
    best = g.n - 1
    for v in range(g.n):
        for d in (len(g.successors(v)), len(g.predecessors(v))):
            if d <= g.n - 2:
                best = min(best, d)
    return best


def _edge_upper_bound(g: DirectedGraph) -> int:
    return min(
        min(len(g.successors(v)), len(g.predecessors(v))) for v in range(g.n)
    )


def _pair_directions(g: DirectedGraph, s: int, t: int, cap: _RunningMin) -> None:
    for a, b in ((s, t), (t, s)):
        if g.has_edge(a, b):
            continue
        ans = vertex_max_flow(g, a, b, cap=cap.get())
        if not ans.saturated:
            cap.offer(ans.value)


def svc(g: DirectedGraph, threads: int = 1) -> int:
    """sigma0: strong vertex connectivity. n-1 for the complete
    bidirected graph (one-vertex clause of the definition)."""
    _require_strong(g)
    cap = _RunningMin(_vertex_upper_bound(g))
    pool = ThreadPoolExecutor(threads) if threads > 1 else None
    try:
        for s in range(g.n):
            if s > cap.get():
                break
            targets = [t for t in range(g.n) if t != s]
            if pool is not None:
                list(pool.map(lambda t: _pair_directions(g, s, t, cap), targets))
            else:
                for t in targets:
                    _pair_directions(g, s, t, cap)
    finally:
        if pool is not None:
            pool.shutdown()
    return cap.get()


def sec(g: DirectedGraph, threads: int = 1) -> int:
    """sigma1: strong edge connectivity, via a fixed pivot (a minimum
    directed edge cut separates vertex 0 from some vertex in one
    direction)."""
    _require_strong(g)
    cap = _RunningMin(_edge_upper_bound(g))

    def probe(t: int) -> None:
        for a, b in ((0, t), (t, 0)):
            ans = edge_max_flow(g, a, b, cap=cap.get())
            if not ans.saturated:
                cap.offer(ans.value)

    targets = list(range(1, g.n))
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            list(pool.map(probe, targets))
    else:
        for t in targets:
            probe(t)
    return cap.get()


def _scc_sizes_after(g: DirectedGraph) -> Tuple[int, ...]:
    return tuple(sorted((len(c) for c in scc(g).components), reverse=True))


def weakening_vertex_sets(
    g: DirectedGraph,
    limit: Optional[int] = None,
    allow_large: bool = False,
    sigma: Optional[int] = None,
    threads: int = 1,
) -> WitnessList:
    """All vertex subsets of size sigma0 whose removal breaks strong
    connectivity (or leaves one vertex), in lexicographic order.

    Enumeration costs O(n^sigma) connectivity checks; sigma >= 3 needs
    allow_large=True.
    """
    _require_strong(g)
    k = svc(g, threads=threads) if sigma is None else sigma
    if k >= 3 and not allow_large:
        raise EnumerationGuardError(
            f"sigma0={k}: subset enumeration needs allow_large=True"
        )
    out = WitnessList()
    for subset in itertools.combinations(range(g.n), k):
        h, _ = remove_vertices(g, subset)
        if h.n == 1 or not is_strongly_connected(h):
            out.append(WeakeningSet("vertex", subset, _scc_sizes_after(h)))
            if limit is not None and len(out) >= limit:
                out.capped = True
                break
    return out


def weakening_edge_sets(
    g: DirectedGraph,
    limit: Optional[int] = None,
    allow_large: bool = False,
    sigma: Optional[int] = None,
    threads: int = 1,
) -> WitnessList:
    """All edge subsets of size sigma1 whose removal breaks strong
    connectivity, in lexicographic order of sorted members."""
    _require_strong(g)
    k = sec(g, threads=threads) if sigma is None else sigma
    if k >= 3 and not allow_large:
        raise EnumerationGuardError(
            f"sigma1={k}: subset enumeration needs allow_large=True"
        )
    out = WitnessList()
    for subset in itertools.combinations(g.sorted_edges(), k):
        h = remove_edges(g, subset)
        if not is_strongly_connected(h):
            out.append(WeakeningSet("edge", subset, _scc_sizes_after(h)))
            if limit is not None and len(out) >= limit:
                out.capped = True
                break
    return out


def undirected_vertex_connectivity(d: UndirectedGraph, threads: int = 1) -> int:
    """Classical zeta0, computed as svc of the doubled digraph (the two
    agree whenever every arc has its reverse). Disconnected -> 0."""
    if d.n < 2 or not d.is_connected():
        return 0
    return svc(doubled(d), threads=threads)


def undirected_edge_connectivity(d: UndirectedGraph, threads: int = 1) -> int:
    """Classical zeta1 via sec of the doubled digraph: a minimum directed
    cut of the doubling counts exactly the undirected edges crossing a
    bipartition. Disconnected -> 0."""
    if d.n < 2 or not d.is_connected():
        return 0
    return sec(doubled(d), threads=threads)


def report(
    g: DirectedGraph,
    enumerate_witnesses: bool = False,
    limit: Optional[int] = None,
    allow_large: bool = False,
    threads: int = 1,
) -> ConnectivityReport:
    """One-graph summary: sigma0/sigma1, underlying zeta0/zeta1, witness
    census (when requested) and stats.

    A graph that is not strongly connected gets a flagged partial report
    with one sub-report per nontrivial SCC.
    """
    st = stats(g)
    if g.n < 2 or not is_strongly_connected(g):
        flags = ["not-strongly-connected"] if g.n >= 2 else ["degenerate"]
        rep = ConnectivityReport(
            sigma0=None,
            sigma1=None,
            zeta0_underlying=None,
            zeta1_underlying=None,
            vertex_witnesses=[],
            edge_witnesses=[],
            witness_counts=None,
            stats=st,
            flags=flags,
        )
        if g.n >= 2:
            from .graphs import induced

            for comp in scc(g).components:
                if len(comp) < 2:
                    continue
                sub, _ = induced(g, comp)
                rep.component_reports.append(
                    report(sub, enumerate_witnesses, limit, allow_large, threads)
                )
                rep.component_vertices.append(sorted(comp))
        return rep

    s0 = svc(g, threads=threads)
    s1 = sec(g, threads=threads)
    und = underlying(g)
    z0 = undirected_vertex_connectivity(und, threads=threads)
    z1 = undirected_edge_connectivity(und, threads=threads)
    flags: List[str] = []
    vw: WitnessList = WitnessList()
    ew: WitnessList = WitnessList()
    counts: Optional[Tuple[int, int]] = None
    if enumerate_witnesses:
        try:
            vw = weakening_vertex_sets(
                g, limit=limit, allow_large=allow_large, sigma=s0, threads=threads
            )
            ew = weakening_edge_sets(
                g, limit=limit, allow_large=allow_large, sigma=s1, threads=threads
            )
            counts = (len(vw), len(ew))
            if vw.capped or ew.capped:
                flags.append("enumeration-capped")
        except EnumerationGuardError as exc:
            flags.append(f"enumeration-skipped: {exc}")
            vw, ew, counts = WitnessList(), WitnessList(), None
    return ConnectivityReport(
        sigma0=s0,
        sigma1=s1,
        zeta0_underlying=z0,
        zeta1_underlying=z1,
        vertex_witnesses=list(vw),
        edge_witnesses=list(ew),
        witness_counts=counts,
        stats=st,
        flags=flags,
    )

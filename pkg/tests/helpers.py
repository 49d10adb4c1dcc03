"""Shared test utilities: seeded graph corpora and tiny brute-force
reachability helpers kept independent of the package's flow/scc code."""

from __future__ import annotations

import itertools
from typing import Iterable, List, Tuple

import svckit as sk


def seeded_random_graphs(count, n_lo=2, n_hi=8, probs=(0.15, 0.3, 0.5, 0.8)):
    """Deterministic stream of (graph, seed) pairs cycling n and p."""
    out = []
    seed = 0
    while len(out) < count:
        n = n_lo + seed % (n_hi - n_lo + 1)
        p = probs[(seed // 7) % len(probs)]
        out.append((sk.random_digraph(n, p, seed), seed))
        seed += 1
    return out


def strongly_connected_corpus(count, n_lo=2, n_hi=8, probs=(0.15, 0.3, 0.5, 0.8)):
    """At least `count` seeded strongly connected random digraphs."""
    out = []
    seed = 0
    while len(out) < count:
        n = n_lo + seed % (n_hi - n_lo + 1)
        p = probs[(seed // 7) % len(probs)]
        g = sk.random_digraph(n, p, seed)
        if sk.is_strongly_connected(g):
            out.append((g, seed))
        seed += 1
    return out


def reaches(n: int, edges: Iterable[Tuple[int, int]], s: int, t: int) -> bool:
    """Plain DFS reachability on an edge list (no package code)."""
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
    seen = {s}
    stack = [s]
    while stack:
        u = stack.pop()
        if u == t:
            return True
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return t in seen


def brute_min_edge_cut(g: sk.DirectedGraph, s: int, t: int) -> int:
    """Smallest |D| over edge subsets D with t unreachable from s in g-D."""
    edges = sorted(g.edges)
    for k in range(len(edges) + 1):
        for subset in itertools.combinations(edges, k):
            remaining = [e for e in edges if e not in set(subset)]
            if not reaches(g.n, remaining, s, t):
                return k
    raise AssertionError("unreachable")


def brute_min_vertex_cut(g: sk.DirectedGraph, s: int, t: int) -> int:
    """Smallest vertex subset (excluding s, t) whose removal makes t
    unreachable from s; n-1 if none exists (direct edge)."""
    others = [w for w in range(g.n) if w not in (s, t)]
    for k in range(len(others) + 1):
        for subset in itertools.combinations(others, k):
            gone = set(subset)
            remaining = [
                (u, v) for u, v in g.edges if u not in gone and v not in gone
            ]
            if not reaches(g.n, remaining, s, t):
                return k
    return g.n - 1

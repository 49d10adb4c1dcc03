"""Strongly connected components (iterative Tarjan) and the condensation DAG.

Traversal order is pinned to ascending vertex ids, so output is
deterministic for a given graph. Components come out in reverse
topological order of the condensation, which is what Tarjan emits.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List

from .graphs import DirectedGraph


@dataclass(frozen=True)
class SccPartition:
    component_of: List[int]       # vertex id -> component index
    components: List[List[int]]   # reverse topological order; each sorted ascending


@dataclass(frozen=True)
class Condensation:
    dag: DirectedGraph            # one vertex per component
    sizes: List[int]              # component index -> vertex count


def scc(g: DirectedGraph) -> SccPartition:
    n = g.n
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: List[int] = []
    comp_of = [-1] * n
    components: List[List[int]] = []
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        # iterative Tarjan: work entries are (vertex, iterator position)
        work = [(root, 0)]
        while work:
            v, pi = work.pop()
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            succ = g.successors(v)
            while pi < len(succ):
                w = succ[pi]
                pi += 1
                if index[w] == -1:
                    work.append((v, pi))
                    work.append((w, 0))
                    recurse = True
                    break
                elif on_stack[w]:
                    if index[w] < low[v]:
                        low[v] = index[w]
            if recurse:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp_of[w] = len(components)
                    comp.append(w)
                    if w == v:
                        break
                comp.sort()
                components.append(comp)
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
    return SccPartition(component_of=comp_of, components=components)


def is_strongly_connected(g: DirectedGraph) -> bool:
    """True iff g has exactly one SCC (single vertex counts)."""
    if g.n == 0:
        return False
    return len(scc(g).components) == 1


def condensation(g: DirectedGraph) -> Condensation:
    part = scc(g)
    k = len(part.components)
    dag_edges = set()
    for u, v in g.edges:
        cu, cv = part.component_of[u], part.component_of[v]
        if cu != cv:
            dag_edges.add((cu, cv))
    sizes = [len(c) for c in part.components]
    return Condensation(dag=DirectedGraph(k, dag_edges), sizes=sizes)

"""Iterated weakening decomposition: repeatedly remove a minimum
weakening vertex set, split into SCCs, and recurse on each nontrivial
component. All bookkeeping is kept in the original graph's vertex ids.

When several minimum sets exist the lexicographically first (by sorted
member ids) is removed and the total witness count is recorded, so a
divergence from some other tie-break can be diagnosed instead of hidden.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .connectivity import (
    EnumerationGuardError,
    WeakeningSet,
    svc,
    undirected_vertex_connectivity,
    weakening_vertex_sets,
)
from .flow import vertex_max_flow
from .graphs import DirectedGraph, PreconditionError, induced, remove_vertices, underlying
from .scc import scc


@dataclass
class DecompositionNode:
    vertices: Tuple[int, ...]              # original ids, ascending
    depth: int
    sigma0: int
    zeta0_underlying: Optional[int]
    chosen_set: Optional[WeakeningSet]     # original coordinates; None at leaves
    witness_count: Optional[int]           # None when not enumerated
    condensation_sizes: Tuple[int, ...]    # sizes after removal, descending
    children: List["DecompositionNode"] = field(default_factory=list)
    witnesses: Optional[List[WeakeningSet]] = None  # all-witnesses-report mode
    flags: List[str] = field(default_factory=list)


def _min_cut_witness(h: DirectedGraph, k: int) -> Tuple[int, ...]:
    # one minimum weakening vertex set extracted from a flow cut
    # certificate; used when full enumeration was not requested
    for s in range(min(h.n, k + 2)):
        for t in range(h.n):
            if t == s:
                continue
            for a, b in ((s, t), (t, s)):
                if h.has_edge(a, b):
                    continue
                ans = vertex_max_flow(h, a, b, cap=k + 1)
                if not ans.saturated and ans.value == k:
                    return tuple(sorted(ans.cut))
    raise AssertionError("no cut of size sigma0 found; sigma0 inconsistent")


def _build(
    g: DirectedGraph,
    vertices: Tuple[int, ...],
    depth: int,
    max_depth: int,
    selection: str,
    enumerate_large: bool,
    compute_zeta: bool,
) -> DecompositionNode:
    h, mapping = induced(g, vertices)
    back = {new: old for old, new in mapping.items()}
    k = svc(h)
    z0 = undirected_vertex_connectivity(underlying(h)) if compute_zeta else None
    node = DecompositionNode(
        vertices=tuple(sorted(vertices)),
        depth=depth,
        sigma0=k,
        zeta0_underlying=z0,
        chosen_set=None,
        witness_count=None,
        condensation_sizes=(),
    )
    if h.m == h.n * (h.n - 1):
        node.flags.append("complete-bidirected")
        return node
    if depth >= max_depth:
        node.flags.append("depth-capped")
        return node

    witnesses = None
    try:
        witnesses = weakening_vertex_sets(h, allow_large=enumerate_large, sigma=k)
    except EnumerationGuardError:
        node.flags.append("witnesses-not-enumerated")
    if witnesses is not None:
        node.witness_count = len(witnesses)
        if selection == "all-witnesses-report":
            node.witnesses = [
                WeakeningSet(
                    kind="vertex",
                    members=tuple(sorted(back[i] for i in w.members)),
                    resulting_scc_sizes=w.resulting_scc_sizes,
                )
                for w in witnesses
            ]
        local_members = witnesses[0].members
        sizes = witnesses[0].resulting_scc_sizes
    else:
        local_members = _min_cut_witness(h, k)
        h_check, _ = remove_vertices(h, local_members)
        sizes = tuple(
            sorted((len(c) for c in scc(h_check).components), reverse=True)
        )
    node.chosen_set = WeakeningSet(
        kind="vertex",
        members=tuple(sorted(back[i] for i in local_members)),
        resulting_scc_sizes=sizes,
    )
    node.condensation_sizes = sizes

    h2, mapping2 = remove_vertices(h, local_members)
    back2 = {new: back[old] for old, new in mapping2.items()}
    parts = scc(h2).components
    # deterministic child order: by descending size then smallest orig id
    comps = [tuple(sorted(back2[v] for v in comp)) for comp in parts if len(comp) >= 2]
    comps.sort(key=lambda c: (-len(c), c[0]))
    for comp in comps:
        node.children.append(
            _build(g, comp, depth + 1, max_depth, selection, enumerate_large, compute_zeta)
        )
    return node


def iterate(
    g: DirectedGraph,
    max_depth: int,
    selection: str = "first-lexicographic",
    enumerate_large: bool = False,
    compute_zeta: bool = True,
) -> DecompositionNode:
    """Build the decomposition tree, removing a minimum weakening vertex
    set at every node of depth < max_depth. Recursion also stops at
    complete bidirected components, where removal degenerates to the
    one-vertex clause."""
    if max_depth < 1:
        raise PreconditionError(f"max_depth must be >= 1, got {max_depth}")
    if selection not in ("first-lexicographic", "all-witnesses-report"):
        raise PreconditionError(f"unknown selection mode {selection!r}")
    from .scc import is_strongly_connected

    if g.n < 2 or not is_strongly_connected(g):
        raise PreconditionError("graph must be strongly connected with n >= 2")
    return _build(
        g, tuple(range(g.n)), 0, max_depth, selection, enumerate_large, compute_zeta
    )


def _largest_chain(tree: DecompositionNode) -> List[DecompositionNode]:
    chain = [tree]
    node = tree
    while node.children:
        node = max(node.children, key=lambda c: (len(c.vertices), -c.vertices[0]))
        chain.append(node)
    return chain


def sigma_trace(tree: DecompositionNode) -> List[int]:
    """sigma0 of the largest component at each depth, root first."""
    return [node.sigma0 for node in _largest_chain(tree)]


def zeta_trace(tree: DecompositionNode) -> List[Optional[int]]:
    """Underlying vertex connectivity along the same largest-component
    chain as sigma_trace."""
    return [node.zeta0_underlying for node in _largest_chain(tree)]

"""File ingestion (edge lists, a strict GraphML subset), canonical JSON
report serialization, and DOT export.

Edge-list grammar: one edge per line, ``source target [ignored-weight]``,
``#`` comments, blank lines allowed. A line with a single token declares
an isolated vertex (needed for lossless round trips). All weights are
discarded: the connectivity notions treat every edge as weight 1.
"""

from __future__ import annotations

import json
import logging
import xml.etree.ElementTree as ET
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, TextIO, Tuple, Union

from .connectivity import ConnectivityReport, WeakeningSet
from .decompose import DecompositionNode
from .graphs import DirectedGraph, GraphStats

log = logging.getLogger("svckit")

SCHEMA = "svckit-report/1"


class ParseError(ValueError):
    """Unreadable or malformed input file."""


@dataclass
class IngestOptions:
    format: str = "auto"          # edgelist | graphml | auto
    delimiter: Optional[str] = None   # None: any whitespace
    has_header: bool = False
    drop_weights: bool = True     # provenance only; always true


@dataclass
class IngestResult:
    graph: DirectedGraph
    self_loops_dropped: int
    duplicates_dropped: int


def read_graph(path: Union[str, Path], opts: Optional[IngestOptions] = None) -> DirectedGraph:
    return read_graph_detailed(path, opts).graph


def read_graph_detailed(
    path: Union[str, Path], opts: Optional[IngestOptions] = None
) -> IngestResult:
    opts = opts or IngestOptions()
    path = Path(path)
    fmt = opts.format
    if fmt == "auto":
        if path.suffix.lower() == ".graphml":
            fmt = "graphml"
        else:
            fmt = _sniff(path)
    if fmt == "edgelist":
        pairs, isolated = _parse_edgelist(path, opts)
    elif fmt == "graphml":
        pairs, isolated = _parse_graphml(path)
    else:
        raise ParseError(f"unknown format {fmt!r}")
    return _assemble(pairs, isolated, path)


def _sniff(path: Path) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            head = fh.read(512)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return "graphml" if "<graphml" in head or "<?xml" in head else "edgelist"


def _parse_edgelist(
    path: Path, opts: IngestOptions
) -> Tuple[List[Tuple[str, str]], List[str]]:
    pairs: List[Tuple[str, str]] = []
    isolated: List[str] = []
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    for lineno, raw in enumerate(lines, start=1):
        if opts.has_header and lineno == 1:
            continue
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split(opts.delimiter) if opts.delimiter else line.split()
        tokens = [t for t in tokens if t]
        if len(tokens) == 1:
            isolated.append(tokens[0])
        elif len(tokens) in (2, 3):
            pairs.append((tokens[0], tokens[1]))
        else:
            raise ParseError(f"{path}:{lineno}: expected 1-3 tokens, got {len(tokens)}")
    return pairs, isolated


def _parse_graphml(path: Path) -> Tuple[List[Tuple[str, str]], List[str]]:
    try:
        tree = ET.parse(path)
    except (ET.ParseError, OSError) as exc:
        raise ParseError(f"{path}: not parseable as GraphML: {exc}") from exc

    def local(tag: str) -> str:
        return tag.rsplit("}", 1)[-1]

    root = tree.getroot()
    graphs = [el for el in root.iter() if local(el.tag) == "graph"]
    if len(graphs) != 1:
        raise ParseError(f"{path}: expected exactly one <graph>, found {len(graphs)}")
    gel = graphs[0]
    if gel.get("edgedefault", "directed") != "directed":
        raise ParseError(f"{path}: only edgedefault='directed' GraphML is supported")
    nodes: List[str] = []
    pairs: List[Tuple[str, str]] = []
    for el in gel:
        tag = local(el.tag)
        if tag == "node":
            nid = el.get("id")
            if nid is None:
                raise ParseError(f"{path}: <node> without id")
            nodes.append(nid)
        elif tag == "edge":
            if el.get("directed") == "false":
                raise ParseError(f"{path}: undirected <edge> not supported")
            s, t = el.get("source"), el.get("target")
            if s is None or t is None:
                raise ParseError(f"{path}: <edge> missing source/target")
            pairs.append((s, t))
    return pairs, nodes


def _assemble(
    pairs: List[Tuple[str, str]], isolated: List[str], path: Path
) -> IngestResult:
    ids: Dict[str, int] = {}

    def vid(token: str) -> int:
        if token not in ids:
            ids[token] = len(ids)
        return ids[token]

    edges = set()
    self_loops = 0
    duplicates = 0
    for a, b in pairs:
        u, v = vid(a), vid(b)
        if u == v:
            self_loops += 1
            continue
        if (u, v) in edges:
            duplicates += 1
            continue
        edges.add((u, v))
    for token in isolated:
        vid(token)
    if not ids:
        raise ParseError(f"{path}: empty graph")
    if self_loops or duplicates:
        log.warning(
            "%s: dropped %d self-loop(s) and %d duplicate edge(s)",
            path, self_loops, duplicates,
        )
    labels = {i: tok for tok, i in ids.items()}
    graph = DirectedGraph(len(ids), edges, labels)
    return IngestResult(graph, self_loops, duplicates)


def write_edgelist(g: DirectedGraph, out: TextIO) -> None:
    """Deterministic edge-list dump using vertex labels; isolated
    vertices get single-token lines so reading back loses nothing."""
    touched = set()
    for u, v in g.sorted_edges():
        out.write(f"{g.label(u)} {g.label(v)}\n")
        touched.add(u)
        touched.add(v)
    for v in range(g.n):
        if v not in touched:
            out.write(f"{g.label(v)}\n")


def _witness_dict(g: DirectedGraph, w: WeakeningSet) -> dict:
    d: dict = {"kind": w.kind, "resulting_scc_sizes": list(w.resulting_scc_sizes)}
    if w.kind == "vertex":
        d["members"] = list(w.members)
        if g.vertex_labels is not None:
            d["labels"] = [g.label(v) for v in w.members]
    else:
        d["members"] = [list(e) for e in w.members]
        if g.vertex_labels is not None:
            d["labels"] = [[g.label(u), g.label(v)] for u, v in w.members]
    return d


def _stats_dict(st: GraphStats) -> dict:
    return {
        "n": st.n,
        "m": st.m,
        "min_degree": st.min_degree,
        "max_degree": st.max_degree,
        "min_in": st.min_in,
        "max_in": st.max_in,
        "min_out": st.min_out,
        "max_out": st.max_out,
        "diameter": st.diameter,
    }


def report_to_dict(r: ConnectivityReport, g: DirectedGraph) -> dict:
    d = {
        "schema": SCHEMA,
        "kind": "connectivity",
        "n": r.stats.n,
        "m": r.stats.m,
        "stats": _stats_dict(r.stats),
        "sigma0": r.sigma0,
        "sigma1": r.sigma1,
        "zeta0_underlying": r.zeta0_underlying,
        "zeta1_underlying": r.zeta1_underlying,
        "witness_counts": list(r.witness_counts) if r.witness_counts else None,
        "vertex_witnesses": [_witness_dict(g, w) for w in r.vertex_witnesses],
        "edge_witnesses": [_witness_dict(g, w) for w in r.edge_witnesses],
        "flags": list(r.flags),
    }
    if r.component_reports:
        from .graphs import induced

        comps = []
        for sub_rep, verts in zip(r.component_reports, r.component_vertices):
            sub_g, _ = induced(g, verts)
            cd = report_to_dict(sub_rep, sub_g)
            cd["vertices"] = list(verts)
            comps.append(cd)
        d["components"] = comps
    return d


def tree_to_dict(node: DecompositionNode, g: DirectedGraph) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "decomposition",
        "root": _node_dict(node, g),
    }


def _node_dict(node: DecompositionNode, g: DirectedGraph) -> dict:
    if node.witnesses is not None:
        return {
            **_node_dict_base(node, g),
            "witnesses": [_witness_dict(g, w) for w in node.witnesses],
        }
    return _node_dict_base(node, g)


def _node_dict_base(node: DecompositionNode, g: DirectedGraph) -> dict:
    return {
        "vertices": list(node.vertices),
        "depth": node.depth,
        "sigma0": node.sigma0,
        "zeta0_underlying": node.zeta0_underlying,
        "chosen_set": _witness_dict(g, node.chosen_set) if node.chosen_set else None,
        "witness_count": node.witness_count,
        "condensation_sizes": list(node.condensation_sizes),
        "flags": list(node.flags),
        "children": [_node_dict(c, g) for c in node.children],
    }


def to_canonical_json(d: dict) -> str:
    return json.dumps(d, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def write_report(
    r: Union[ConnectivityReport, DecompositionNode],
    path: Union[str, Path],
    g: DirectedGraph,
) -> None:
    """Serialize a report or decomposition tree as canonical JSON (stable
    key order, deterministic arrays)."""
    if isinstance(r, ConnectivityReport):
        d = report_to_dict(r, g)
    elif isinstance(r, DecompositionNode):
        d = tree_to_dict(r, g)
    else:
        raise TypeError(f"cannot serialize {type(r).__name__}")
    Path(path).write_text(to_canonical_json(d), encoding="utf-8")


def export_dot(g: DirectedGraph, highlight: Optional[WeakeningSet] = None) -> str:
    """Valid DOT text; highlighted weakening-set members (vertices or
    edges) styled distinctly. Output is deterministic."""
    hv = set()
    he = set()
    if highlight is not None:
        if highlight.kind == "vertex":
            hv = set(highlight.members)
        else:
            he = {tuple(e) for e in highlight.members}
    lines = ["digraph G {"]
    for v in range(g.n):
        attrs = [f'label="{g.label(v)}"']
        if v in hv:
            attrs.append("style=filled")
            attrs.append("fillcolor=orangered")
        lines.append(f"  {v} [{', '.join(attrs)}];")
    for u, v in g.sorted_edges():
        if (u, v) in he:
            lines.append(f"  {u} -> {v} [color=orangered, penwidth=2];")
        else:
            lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"

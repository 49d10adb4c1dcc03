import io
import json

import pytest

import svckit as sk
from svckit.interface import (
    IngestOptions,
    ParseError,
    export_dot,
    read_graph,
    read_graph_detailed,
    report_to_dict,
    to_canonical_json,
    tree_to_dict,
    write_edgelist,
    write_report,
)


class TestEdgelistIngestion:
    def test_two_cycle(self, tmp_path):
        f = tmp_path / "g.edges"
        f.write_text("a b\nb a\n")
        g = read_graph(f)
        assert g.n == 2 and g.edges == frozenset({(0, 1), (1, 0)})
        assert g.vertex_labels == {0: "a", 1: "b"}

    def test_self_loop_dropped_with_count(self, tmp_path):
        f = tmp_path / "g.edges"
        f.write_text("a a\na b\nb a\n")
        res = read_graph_detailed(f)
        assert res.self_loops_dropped == 1
        assert res.graph.m == 2

    def test_duplicates_dropped(self, tmp_path):
        f = tmp_path / "g.edges"
        f.write_text("a b\na b 0.7\nb a\n")
        res = read_graph_detailed(f)
        assert res.duplicates_dropped == 1 and res.graph.m == 2

    def test_weight_column_ignored(self, tmp_path):
        f = tmp_path / "g.edges"
        f.write_text("x y 3.5\ny x 1\n")
        assert read_graph(f).m == 2

    def test_comments_and_blanks(self, tmp_path):
        f = tmp_path / "g.edges"
        f.write_text("# header comment\n\na b # inline\nb a\n")
        assert read_graph(f).m == 2

    def test_header_skip(self, tmp_path):
        f = tmp_path / "g.csv"
        f.write_text("source,target\na,b\nb,a\n")
        g = read_graph(f, IngestOptions(delimiter=",", has_header=True))
        assert g.m == 2

    def test_bad_line_reports_number(self, tmp_path):
        f = tmp_path / "g.edges"
        f.write_text("a b\none two three four\n")
        with pytest.raises(ParseError, match=":2:"):
            read_graph(f)

    def test_empty_rejected(self, tmp_path):
        f = tmp_path / "g.edges"
        f.write_text("# nothing\n")
        with pytest.raises(ParseError, match="empty"):
            read_graph(f)

    def test_roundtrip(self, tmp_path):
        g = sk.gamma(sk.FamilyParams(2, 3))
        buf = io.StringIO()
        write_edgelist(g, buf)
        f = tmp_path / "rt.edges"
        f.write_text(buf.getvalue())
        g2 = read_graph(f)
        assert g2.n == g.n
        relabel = {v: g2.label(v) for v in range(g2.n)}
        orig = {(g.label(u), g.label(v)) for u, v in g.edges}
        back = {(relabel[u], relabel[v]) for u, v in g2.edges}
        assert orig == back

    def test_roundtrip_with_isolated_vertex(self, tmp_path):
        g = sk.DirectedGraph(3, [(0, 1)], {0: "a", 1: "b", 2: "lonely"})
        buf = io.StringIO()
        write_edgelist(g, buf)
        f = tmp_path / "iso.edges"
        f.write_text(buf.getvalue())
        g2 = read_graph(f)
        assert g2.n == 3
        assert "lonely" in g2.vertex_labels.values()


class TestGraphmlIngestion:
    GOOD = """<?xml version="1.0"?>
<graphml xmlns="http://graphml.graphdrawing.org/xmlns">
  <graph id="G" edgedefault="directed">
    <node id="a"/><node id="b"/><node id="c"/>
    <edge source="a" target="b"/>
    <edge source="b" target="c"/>
    <edge source="c" target="a"/>
  </graph>
</graphml>
"""

    def test_directed_cycle(self, tmp_path):
        f = tmp_path / "g.graphml"
        f.write_text(self.GOOD)
        g = read_graph(f)
        assert g.n == 3 and sk.is_strongly_connected(g)

    def test_undirected_rejected(self, tmp_path):
        f = tmp_path / "g.graphml"
        f.write_text(self.GOOD.replace('edgedefault="directed"', 'edgedefault="undirected"'))
        with pytest.raises(ParseError, match="directed"):
            read_graph(f)

    def test_garbage_rejected(self, tmp_path):
        f = tmp_path / "g.graphml"
        f.write_text("<graphml><oops")
        with pytest.raises(ParseError):
            read_graph(f)


class TestReportSerialization:
    def test_schema_and_values(self, tmp_path):
        g = sk.gamma(sk.FamilyParams(1, 3))
        rep = sk.report(g, enumerate_witnesses=True)
        out = tmp_path / "report.json"
        write_report(rep, out, g)
        d = json.loads(out.read_text())
        assert d["schema"] == "svckit-report/1"
        assert d["sigma0"] == 1 and d["zeta0_underlying"] == 3
        assert d["witness_counts"][0] == 1
        assert d["vertex_witnesses"][0]["labels"] == ["1"]

    def test_empty_witnesses_when_not_enumerating(self, tmp_path):
        g = sk.directed_cycle(4)
        rep = sk.report(g, enumerate_witnesses=False)
        d = report_to_dict(rep, g)
        assert d["vertex_witnesses"] == [] and d["witness_counts"] is None

    def test_canonical_json_reserializes_identically(self):
        g = sk.directed_cycle(5)
        d = report_to_dict(sk.report(g, enumerate_witnesses=True), g)
        text = to_canonical_json(d)
        assert to_canonical_json(json.loads(text)) == text

    def test_tree_roundtrip(self, tmp_path):
        g = sk.gamma(sk.FamilyParams(2, 3))
        tree = sk.iterate(g, max_depth=3)
        out = tmp_path / "tree.json"
        write_report(tree, out, g)
        d = json.loads(out.read_text())
        assert d["kind"] == "decomposition"

        def depth(nd):
            return 1 + max((depth(c) for c in nd["children"]), default=0)

        def tree_depth(node):
            return 1 + max((tree_depth(c) for c in node.children), default=0)

        assert depth(d["root"]) == tree_depth(tree)


class TestDotExport:
    def test_two_cycle(self):
        text = export_dot(sk.directed_cycle(2))
        assert "0 -> 1;" in text and "1 -> 0;" in text

    def test_highlighted_vertex(self):
        g = sk.gamma(sk.FamilyParams(1, 3))
        w = sk.weakening_vertex_sets(g)[0]
        text = export_dot(g, highlight=w)
        assert '0 [label="1", style=filled, fillcolor=orangered];' in text

    def test_labels_quoted(self):
        g = sk.DirectedGraph(2, [(0, 1)], {0: "left node", 1: "right"})
        text = export_dot(g)
        assert 'label="left node"' in text

    def test_deterministic(self):
        g = sk.random_digraph(8, 0.4, 3)
        assert export_dot(g) == export_dot(g)

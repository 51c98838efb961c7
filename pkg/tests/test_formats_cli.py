import json
import re

import pytest

from strongprod import RootedTree, orient_tree_product
from strongprod.cli import main
from strongprod.cycle_orient import orient_cycle_product
from strongprod.errors import DuplicateEdge, InvalidEdge, ParseError
from strongprod.formats import dumps, export_dot, format_graph_file, parse_graph_file, parse_vertex
from strongprod.generators import path_graph, star_graph


def write(tmp_path, name, g, root=None):
    path = tmp_path / name
    path.write_text(format_graph_file(g, root))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestParse:
    def test_p2(self):
        g, root = parse_graph_file("graph 2 1\n0 1\n")
        assert g.vertex_count == 2 and g.edges() == [(0, 1)] and root is None

    def test_triangle(self):
        g, _ = parse_graph_file("graph 3 3\n0 1\n1 2\n0 2\n")
        assert g.edges() == [(0, 1), (0, 2), (1, 2)]

    def test_root_and_blank_lines(self):
        g, root = parse_graph_file("\ngraph 3 2\nroot 2\n\n0 1\n1 2\n")
        assert root == 2 and g.edge_count == 2

    def test_out_of_range(self):
        with pytest.raises(InvalidEdge) as exc:
            parse_graph_file("graph 2 1\n0 2\n")
        assert (exc.value.line, exc.value.column) == (2, 3)

    def test_duplicate(self):
        with pytest.raises(DuplicateEdge) as exc:
            parse_graph_file("graph 3 2\n0 1\n1 0\n")
        assert exc.value.line == 3

    @pytest.mark.parametrize("text,line", [
        ("", 1),
        ("grph 2 1\n0 1\n", 1),
        ("graph 2 x\n0 1\n", 1),
        ("graph 3 2\n0 1\n", 3),
        ("graph 3 1\n0 1\n1 2\n", 3),
        ("graph 3 1\n0 1 2\n", 2),
        ("graph 3 1\nroot 5\n0 1\n", 2),
    ])
    def test_malformed(self, text, line):
        with pytest.raises(ParseError) as exc:
            parse_graph_file(text)
        assert exc.value.line == line

    def test_self_loop(self):
        with pytest.raises(InvalidEdge):
            parse_graph_file("graph 2 1\n1 1\n")

    def test_round_trip(self):
        g = star_graph(4)
        assert parse_graph_file(format_graph_file(g, 3)) == (g, 3)

    def test_vertex_labels(self):
        assert parse_vertex("3,12") == (3, 12)
        with pytest.raises(ParseError):
            parse_vertex("3;12")

    def test_error_document(self):
        with pytest.raises(ParseError) as exc:
            parse_graph_file("graph 2 1\n0 9\n")
        doc = exc.value.to_dict()
        assert doc["error"] == "InvalidEdge" and doc["line"] == 2


class TestDot:
    def test_p2_p2(self):
        t = RootedTree.from_tree(path_graph(2), 0)
        op = orient_tree_product(t, t)
        text = export_dot(op)
        assert len(re.findall(r'\[pos=', text)) == 4
        assert len(re.findall(r' -> ', text)) == 6
        assert op.rule_histogram == {"A": 2, "B": 2, "G2": 2}
        assert '"0,0" [pos="0,0!"]' in text

    def test_c4_c4(self):
        text = export_dot(orient_cycle_product(4, 4))
        assert len(re.findall(r'\[pos=', text)) == 16
        assert len(re.findall(r' -> ', text)) == 64

    def test_deterministic(self):
        assert export_dot(orient_cycle_product(6, 4)) == export_dot(orient_cycle_product(6, 4))

    def test_canonical_json(self):
        assert dumps({"b": 1, "a": [1]}) == '{\n  "a": [\n    1\n  ],\n  "b": 1\n}\n'


class TestCli:
    def test_cycles(self, capsys):
        code, out, _ = run(capsys, "orient-cycles", "--m", "4", "--n", "4")
        doc = json.loads(out)
        assert code == 0
        assert doc["diameter"]["diameter"] == 3
        assert doc["diameter"]["bound_kind"] == "CycleProposition"
        assert doc["schema"] == 1 and doc["findings"] == []

    def test_cycles_finding_recorded(self, capsys):
        code, out, _ = run(capsys, "orient-cycles", "--m", "4", "--n", "8")
        doc = json.loads(out)
        assert code == 0
        assert doc["findings"] == [{"finding": "CycleDiameterDiffersFromClaim", "claimed": 5, "measured": 4}]

    def test_bad_cycle(self, capsys):
        code, _, err = run(capsys, "orient-cycles", "--m", "5", "--n", "4")
        assert code == 3 and json.loads(err)["error"] == "InvalidCycleLength"

    def test_trees(self, capsys, tmp_path):
        p2 = write(tmp_path, "p2.txt", path_graph(2))
        code, out, _ = run(capsys, "orient-trees", "--t1", p2, "--t2", p2)
        doc = json.loads(out)
        assert code == 0 and doc["certified"]
        assert doc["diameter"]["diameter"] == 3 and doc["diameter"]["bound"] == 16
        assert doc["diameter"]["witness"] == ["1,0", "1,1"]
        assert doc["factors"][0]["root"] == 0
        assert doc["lemma_violations"] == []

    def test_trees_root_flags(self, capsys, tmp_path):
        p3 = write(tmp_path, "p3.txt", path_graph(3), root=0)
        p2 = write(tmp_path, "p2.txt", path_graph(2))
        _, out, _ = run(capsys, "orient-trees", "--t1", p3, "--t2", p2)
        assert json.loads(out)["diameter"]["diameter"] == 5
        _, out, _ = run(capsys, "orient-trees", "--t1", p3, "--t2", p2, "--root1", "1")
        assert json.loads(out)["diameter"]["diameter"] == 3

    def test_trees_with_oracle(self, capsys, tmp_path):
        p2 = write(tmp_path, "p2.txt", path_graph(2))
        p3 = write(tmp_path, "p3.txt", path_graph(3))
        _, out, _ = run(capsys, "orient-trees", "--t1", p2, "--t2", p3, "--root2", "0", "--oracle")
        assert json.loads(out)["oracle"]["diam_min"] == 3
        assert json.loads(out)["oracle"]["gap"] == 1

    def test_not_a_tree(self, capsys, tmp_path):
        tri = tmp_path / "tri.txt"
        tri.write_text("graph 3 3\n0 1\n1 2\n0 2\n")
        code, _, err = run(capsys, "orient-trees", "--t1", str(tri), "--t2", str(tri))
        assert code == 3 and json.loads(err)["error"] == "NotATree"

    def test_bruteforce_bridge(self, capsys, tmp_path):
        p2 = write(tmp_path, "p2.txt", path_graph(2))
        code, _, err = run(capsys, "bruteforce", "--g", p2)
        doc = json.loads(err)
        assert code == 3 and doc["error"] == "NotBridgeless"

    def test_bruteforce_triangle(self, capsys, tmp_path):
        tri = tmp_path / "tri.txt"
        tri.write_text("graph 3 3\n0 1\n1 2\n0 2\n")
        code, out, _ = run(capsys, "bruteforce", "--g", str(tri))
        doc = json.loads(out)
        assert code == 0 and doc["oracle"]["diam_min"] == 2 and doc["oracle"]["strong_count"] == 2

    def test_parse_error_exit(self, capsys, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("graph 2 1\n0 2\n")
        code, _, err = run(capsys, "bruteforce", "--g", str(bad))
        doc = json.loads(err)
        assert code == 2 and doc["error"] == "InvalidEdge" and doc["line"] == 2

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "bruteforce", "--g", str(tmp_path / "nope.txt"))
        assert code == 2 and json.loads(err)["error"] == "ParseError"

    def test_general(self, capsys, tmp_path, C, K):
        g = write(tmp_path, "c6.txt", C(6))
        h = write(tmp_path, "k3.txt", K(3))
        code, out, _ = run(capsys, "orient-general", "--g", g, "--h", h)
        doc = json.loads(out)
        assert code == 0 and doc["diameter"]["bound"] == 2 * 3 + 15
        assert doc["rules"]["Residual"] > 0

    @pytest.mark.parametrize("argv", [
        ["orient-cycles", "--m", "6", "--n", "4"],
        ["orient-trees", "--t1", "{star}", "--t2", "{p4}", "--root1", "2"],
        ["orient-general", "--g", "{c4}", "--h", "{p4}"],
    ])
    def test_verify_round_trip(self, capsys, tmp_path, argv, C):
        files = {"star": write(tmp_path, "s.txt", star_graph(3)), "p4": write(tmp_path, "p4.txt", path_graph(4)),
                 "c4": write(tmp_path, "c4.txt", C(4))}
        argv = [a.format(**files) for a in argv]
        report = tmp_path / "r.json"
        assert run(capsys, *argv, "--json", str(report))[0] == 0
        code, out, _ = run(capsys, "verify", "--report", str(report))
        doc = json.loads(out)
        assert code == 0 and doc["mismatched_fields"] == [] and doc["certified"]
        assert doc["diameter"] == json.loads(report.read_text())["diameter"]

    def test_verify_detects_tampering(self, capsys, tmp_path):
        report = tmp_path / "r.json"
        run(capsys, "orient-cycles", "--m", "4", "--n", "4", "--json", str(report))
        doc = json.loads(report.read_text())
        a, b, tag = doc["orientation"]["arcs"][0]
        doc["orientation"]["arcs"][0] = [b, a, tag]
        report.write_text(json.dumps(doc))
        code, out, _ = run(capsys, "verify", "--report", str(report))
        assert code == 4 and json.loads(out)["mismatched_fields"]

    def test_verify_rejects_garbage(self, capsys, tmp_path):
        report = tmp_path / "r.json"
        report.write_text("{not json")
        assert run(capsys, "verify", "--report", str(report))[0] == 2
        report.write_text(json.dumps({"schema": 1, "command": "orient-trees", "factors": [
            {"vertices": 2, "edges": [[0, 1]]}, {"vertices": 2, "edges": [[0, 1]]}]}))
        code, _, err = run(capsys, "verify", "--report", str(report))
        assert code == 2 and json.loads(err)["error"] == "ParseError"

    def test_byte_identical(self, capsys, tmp_path):
        outs = []
        for i in range(2):
            r, d = tmp_path / f"r{i}.json", tmp_path / f"d{i}.dot"
            run(capsys, "orient-cycles", "--m", "6", "--n", "8", "--json", str(r), "--dot", str(d))
            outs.append((r.read_bytes(), d.read_bytes()))
        assert outs[0] == outs[1]

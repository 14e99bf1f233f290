import json

import pytest

from quantum_maxcut.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestSolve:
    def test_single_edge(self, tmp_path, capsys):
        path = tmp_path / "edge.txt"
        path.write_text("0 1 1.0\n")
        code, out = run(capsys, "solve", str(path))
        assert code == 0
        report = json.loads(out)
        assert report["schema"] == 1
        assert report["opt"] == pytest.approx(2.0, abs=1e-8)
        by_label = {e["label"]: e for e in report["algorithms"]}
        assert by_label["match-singlet"]["value"] == pytest.approx(2.0)
        assert by_label["match-singlet"]["ratio_vs_opt"] == pytest.approx(1.0)
        assert report["verdicts"]["candidate_ratio"] == "pass"

    def test_triangle(self, tmp_path, capsys):
        path = tmp_path / "tri.txt"
        path.write_text("0 1\n1 2\n2 0\n")
        code, out = run(capsys, "solve", str(path))
        assert code == 0
        report = json.loads(out)
        by_label = {e["label"]: e for e in report["algorithms"]}
        assert by_label["sdp-relaxation"]["value"] == pytest.approx(2.25, abs=1e-6)
        assert report["opt"] == pytest.approx(3.0, abs=1e-8)
        assert by_label["best-candidate"]["value"] >= 2.25 - 1e-6

    def test_bad_path(self, capsys):
        assert main(["solve", "/nonexistent/graph.txt"]) == 1

    def test_parse_error(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("0 1 -3\n")
        assert main(["solve", str(path)]) == 1

    def test_deterministic_given_seed(self, tmp_path, capsys):
        path = tmp_path / "g.txt"
        path.write_text("0 1 1\n1 2 2\n0 2 0.5\n2 3 1\n")
        _, out1 = run(capsys, "solve", str(path), "--seed", "7")
        _, out2 = run(capsys, "solve", str(path), "--seed", "7")
        r1, r2 = json.loads(out1), json.loads(out2)
        for e1, e2 in zip(r1["algorithms"], r2["algorithms"]):
            e1.pop("seconds", None)
            e2.pop("seconds", None)
        assert r1 == r2

    def test_algorithm_subset(self, tmp_path, capsys):
        path = tmp_path / "edge.txt"
        path.write_text("0 1\n")
        code, out = run(capsys, "solve", str(path), "--algorithms", "tree,singlet")
        assert code == 0
        labels = {e["label"] for e in json.loads(out)["algorithms"]}
        assert labels == {"sdp-relaxation", "tree-coloring", "match-singlet"}

    def test_out_file(self, tmp_path, capsys):
        path = tmp_path / "edge.txt"
        path.write_text("0 1\n")
        dest = tmp_path / "report.json"
        code, _ = run(capsys, "solve", str(path), "--out", str(dest))
        assert code == 0
        assert json.loads(dest.read_text())["schema"] == 1


class TestRandom:
    def test_k4_is_only_three_regular_on_four(self, capsys):
        code, out = run(capsys, "random", "--n", "4", "--model", "regular-3")
        assert code == 0
        edges = {tuple(line.split()[:2]) for line in out.strip().splitlines()}
        assert len(edges) == 6

    def test_odd_degree_product_rejected(self, capsys):
        assert main(["random", "--n", "5", "--model", "regular-3"]) == 1

    def test_star(self, capsys):
        code, out = run(capsys, "random", "--n", "6", "--model", "star")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 5
        assert all(line.split()[0] == "0" for line in lines)

    def test_output_parses_back(self, tmp_path, capsys):
        from quantum_maxcut import parse_graph

        dest = tmp_path / "g.txt"
        code, _ = run(capsys, "random", "--n", "10", "--model", "gnp",
                      "--weights", "exp", "--seed", "3", "--out", str(dest))
        assert code == 0
        g = parse_graph(dest.read_text())
        assert g.n <= 10


class TestReproduce:
    def test_g_values(self, capsys):
        code, out = run(capsys, "reproduce", "--which", "G-values")
        assert code == 0
        report = json.loads(out)
        assert 1.046 <= report["G_3"] <= 1.048
        assert 1.000 <= report["G_4"] <= 1.002

    def test_minmax_grid(self, capsys):
        code, out = run(capsys, "reproduce", "--which", "prod2-minmax")
        assert code == 0
        report = json.loads(out)
        assert report["exact_minimum"] >= 0.55
        assert report["weakened_minimum"] >= 0.53
        assert report["passed"]

    def test_basis_state_batch(self, capsys):
        code, out = run(capsys, "reproduce", "--which", "theorem5",
                        "--instances", "10")
        assert code == 0
        assert json.loads(out)["passed"]

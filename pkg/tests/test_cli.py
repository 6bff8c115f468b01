"""
End-to-end tests of the command-line front end.

JSON output is compared with golden files; text output is checked for the
lines a reader looks for.
"""

import json
from pathlib import Path

import pytest

from src.cli import run

ROOT = Path(__file__).parent.parent
GOLDEN = Path(__file__).parent / "golden"
CONFIG = ["--config", str(ROOT / "config")]


def _stdout(capsys, *argv):
    assert run([*argv, *CONFIG, "--format", "json"]) == 0
    return capsys.readouterr().out


def _json(capsys, *argv):
    return json.loads(_stdout(capsys, *argv))


def _golden(name):
    return (GOLDEN / name).read_text()


class TestReport:
    def test_single_alpha(self, capsys):
        doc = _json(capsys, "report", "--model", "grassmannian:2,4", "--alpha=-1,-1,0")
        assert doc["model"] == "grassmannian:2,4"
        assert len(doc["alphas"]) == 1
        assert doc["alphas"][0]["tangent"] == {"2": 1, "1": 2, "0": 1}
        assert doc["verdict"] is True

    def test_alpha_inside_model_spec(self, capsys):
        doc = _json(capsys, "report", "--model", "A3/2@0,-1,-1")
        assert doc["model"] == "A3/2"
        assert doc["alphas"][0]["alpha"] == [0, -1, -1]

    def test_all_alphas_golden(self, capsys):
        out = _stdout(capsys, "report", "--model", "projective:1", "--all-alphas")
        assert out == _golden("report_projective_1.json")

    def test_preset_and_type_form_agree(self, capsys):
        by_preset = _json(capsys, "report", "--model", "lg2", "--all-alphas")
        by_type = _json(capsys, "report", "--type", "C2", "--cross", "2", "--all-alphas", "--parallel")
        assert by_preset["alphas"] == by_type["alphas"]
        assert by_type["model"] == "C2/2"

    def test_output_is_deterministic(self, capsys):
        first = _json(capsys, "report", "--model", "flag:1,1,1", "--all-alphas")
        second = _json(capsys, "report", "--model", "flag:1,1,1", "--all-alphas", "--parallel")
        assert first == second

    def test_projective_plane_all_alphas(self, capsys):
        doc = _json(capsys, "report", "--model", "projective:2", "--all-alphas")
        assert [entry["tangent"] for entry in doc["alphas"]] == [{"2": 1, "1": 1}] * 2
        assert [entry["curvature"] for entry in doc["alphas"]] == [{"-3": 8}] * 2
        assert doc["verdict"] is True

    def test_text(self, capsys):
        assert run(["report", "--model", "gr24", "--alpha=-1,-1,0", *CONFIG]) == 0
        out = capsys.readouterr().out
        assert "MODEL: grassmannian:2,4 (A3/{2})" in out
        assert "O(2) + O(1)^2 + O(0)" in out

    def test_write_to_file(self, capsys, tmp_path):
        out_file = tmp_path / "reports" / "p2.json"
        code = run(["report", "--model", "p2", "--all-alphas", "--format", "json", "--out", str(out_file), *CONFIG])
        assert code == 0
        assert capsys.readouterr().out == ""
        assert json.loads(out_file.read_text())["dim_gp"] == 2


class TestFlatness:
    def test_spinor(self, capsys):
        doc = _json(capsys, "flatness", "--type", "D4", "--cross", "4")
        assert doc["dim_gp"] == 6
        assert len(doc["alphas"]) == 6
        assert doc["verdict"] is True

    def test_text_conclusion(self, capsys):
        assert run(["flatness", "--model", "projective:2", *CONFIG]) == 0
        out = capsys.readouterr().out
        assert "verdict: true" in out
        assert "is flat." in out


class TestAudit:
    def test_grassmannian_golden(self, capsys):
        out = _stdout(capsys, "audit", "--model", "grassmannian:2,4")
        assert out == _golden("audit_grassmannian_2_4.json")

    def test_single_entry(self, capsys):
        doc = _json(capsys, "audit", "--model", "spinor:4", "--indices", "3,1")
        assert {r["formula"] for r in doc["results"]} == {"O(2)", "p_1", "p_0", "rank"}
        assert all(r["indices"] == {"i": 3, "j": 1} for r in doc["results"])

    def test_csv(self, capsys, tmp_path):
        csv_file = tmp_path / "audit.csv"
        assert run(["audit", "--model", "lagrangian:2", "--csv", str(csv_file), *CONFIG]) == 0
        assert "AUDIT: Lagrangian-Grassmannian connections" in capsys.readouterr().out
        lines = csv_file.read_text().splitlines()
        assert lines[0].startswith("formula,expression,indices")
        assert len(lines) == 1 + 3 * 4

    def test_needs_named_model(self, capsys):
        assert run(["audit", "--type", "A3", "--cross", "2", *CONFIG]) == 2
        assert "named model" in capsys.readouterr().err

    def test_bad_indices(self, capsys):
        assert run(["audit", "--model", "grassmannian:2,4", "--indices", "2,1", *CONFIG]) == 2
        assert "diagonal block" in capsys.readouterr().err


class TestP1AndRoots:
    def test_p1_quotient(self, capsys):
        data = _json(capsys, "p1", "--top-weight", "2", "--nodes", "3", "--quotient", "2")
        assert data["splitting"] == {"0": 3}
        assert data["equivariantly_trivial"] is True
        assert data["quotient"]["splitting"] == {"2": 1}

    def test_p1_tensor_text(self, capsys):
        assert run(["p1", "-k", "1", "-n", "1", "--tensor", "1,1", *CONFIG]) == 0
        out = capsys.readouterr().out
        assert "bundle:        O(-1)" in out
        assert "O(-2)" in out

    def test_roots(self, capsys):
        data = _json(capsys, "roots", "--type", "B2")
        assert data["positive_roots"] == [[1, 0], [0, 1], [1, 1], [1, 2]]
        assert data["cartan_matrix"] == [[2, -1], [-2, 2]]
        assert data["dim_g"] == 10


def test_sweep(capsys, tmp_path):
    csv_file = tmp_path / "sweep.csv"
    data = _json(capsys, "sweep", "--max-rank", "2", "--families", "A,G", "--no-progress", "--csv", str(csv_file))
    assert data["cases"] == 24
    assert data["violations"] == []
    assert csv_file.exists()


def test_schema(capsys):
    schema = _json(capsys, "schema", "--document", "audit")
    assert "results" in schema["properties"]


class TestErrors:
    @pytest.mark.parametrize("argv,message", [
        (["report", "--type", "A3", "--cross", "5", "--all-alphas"], "out of range"),
        (["report", "--type", "E9", "--cross", "1", "--all-alphas"], "E9"),
        (["report", "--model", "grassmannian:2,4"], "--alpha or --all-alphas"),
        (["report", "--model", "grassmannian:2,4", "--alpha=-1,0,0"], "not omitted"),
        (["report", "--model", "grassmannian:2,x", "--all-alphas"], "'x'"),
        (["report", "--model", "p2", "--type", "A2", "--all-alphas"], "not both"),
        (["flatness", "--type", "A2"], "no omitted roots"),
        (["flatness"], "No model given"),
        (["audit", "--model", "e8:1"], "Unknown model"),
        (["p1", "-k", "2", "-n", "3", "--sub", "4"], "out of range"),
    ])
    def test_bad_input_exits_2(self, capsys, argv, message):
        assert run([*argv, *CONFIG]) == 2
        err = capsys.readouterr().err
        errors = [line for line in err.splitlines() if line.startswith("error: ")]
        assert len(errors) == 1
        assert message in errors[0]

    def test_argparse_errors(self, capsys):
        assert run(["report", "--no-such-flag"]) == 2
        assert run([]) == 2
        assert run(["p1", "-k", "1", "-n", "1", "--sub", "1", "--quotient", "0"]) == 2

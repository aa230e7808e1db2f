from __future__ import annotations

import json
import subprocess
import sys

import pytest

from barbellkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestBarbellCheck:
    def test_petersen(self, capsys):
        code, out, _ = run(capsys, "barbell", "check", "petersen")
        assert code == 1 and "does_not_admit" in out

    def test_admits_json(self, capsys):
        code, out, _ = run(capsys, "barbell", "check", "K1,4", "--json")
        data = json.loads(out)
        assert code == 0 and data["verdict"] == "admits" and data["R"] == [1]

    def test_human_output_states_consequence(self, capsys):
        _, out, _ = run(capsys, "barbell", "check", "C`")
        assert "not in G^SSP" in out

    def test_edge_list_file(self, capsys, tmp_path):
        f = tmp_path / "g.txt"
        f.write_text("4\n1 2\n3 4\n")
        code, out, _ = run(capsys, "barbell", "check", str(f), "--json")
        assert code == 0 and json.loads(out)["R"] == []

    def test_stdin(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO("C`\n"))
        code, _, _ = run(capsys, "barbell", "check", "-")
        assert code == 0

    def test_malformed(self, capsys):
        code, _, err = run(capsys, "barbell", "check", "C~~")
        assert code == 64 and "error" in err

    def test_budget_exceeded(self, capsys):
        code, _, _ = run(capsys, "barbell", "check", "C9", "--budget", "1", "--brute-cap", "3")
        assert code == 2

    def test_cut_set_out_of_range(self, capsys):
        code, _, _ = run(capsys, "barbell", "check", "C4", "--cut-set", "1,9")
        assert code == 64

    def test_plot(self, capsys, tmp_path):
        png = tmp_path / "p.png"
        run(capsys, "barbell", "check", "K1,4", "--plot", str(png))
        assert png.read_bytes()[:4] == b"\x89PNG"


class TestOpsBuild:
    def test_prism(self, capsys, tmp_path):
        png = tmp_path / "prism.png"
        code, out, _ = run(capsys, "ops", "build", "prism", "4", "2", "--json", "--plot", str(png))
        data = json.loads(out)
        assert code == 0 and len(data["R"]) == 16 and data["method"] == "constructive_transfer"
        assert png.exists()

    def test_refused_construction_falls_back(self, capsys):
        code, out, err = run(capsys, "ops", "build", "tensor-complete", "3", "3")
        assert code == 1 and "hypothesis failed" in err
        assert "no barbell partition exists" in out

    def test_jdup_path_pendant_note(self, capsys):
        code, out, _ = run(capsys, "ops", "build", "jdup", "P5", "1")
        assert code == 1 and "q(H) = |H| - 1" in out

    def test_corona(self, capsys):
        code, out, _ = run(capsys, "ops", "build", "corona", "K2", "K2", "--json")
        assert code == 0 and json.loads(out)["R"] == ["g1", "g2"]

    def test_transfer_partition(self, capsys, tmp_path):
        f = tmp_path / "p.json"
        f.write_text(json.dumps({"R": [1], "W1": [2, 3], "W2": [4, 5]}))
        code, out, _ = run(
            capsys, "ops", "build", "dup", "K1,4", "1", "--transfer-partition", str(f), "--json"
        )
        assert code == 0 and 6 in json.loads(out)["R"]

    def test_missing_inputs(self, capsys):
        code, _, _ = run(capsys, "ops", "build", "join", "K2")
        assert code == 64

    def test_unknown_kind(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["ops", "build", "nope"])
        assert exc.value.code == 64


class TestSspCheck:
    def test_fails_with_witness(self, capsys, tmp_path):
        f = tmp_path / "a.txt"
        f.write_text("2\n1 0\n0 1\n")
        code, out, _ = run(capsys, "ssp", "check", str(f))
        data = json.loads(out)
        assert code == 1 and data["witness"] == [[["0", "1"], ["1", "0"]]]

    def test_holds(self, capsys, tmp_path):
        f = tmp_path / "c6.txt"
        f.write_text(
            "6\n2 -3 0 0 0 -3\n-3 2 -3 0 0 0\n0 -3 2 -3 0 0\n"
            "0 0 -3 -2 -3 0\n0 0 0 -3 -2 -3\n-3 0 0 0 -3 -2\n"
        )
        code, out, _ = run(capsys, "ssp", "check", str(f), "--property", "SSP")
        assert code == 0 and json.loads(out)["holds"]

    def test_float_indeterminate(self, capsys, tmp_path):
        f = tmp_path / "a.txt"
        f.write_text("3\n1 0 0\n0 1.000000001 0\n0 0 5\n")
        code, _, _ = run(capsys, "ssp", "check", str(f), "--float")
        assert code == 2

    def test_asymmetric(self, capsys, tmp_path):
        f = tmp_path / "a.txt"
        f.write_text("2\n1 2\n3 1\n")
        code, _, err = run(capsys, "ssp", "check", str(f))
        assert code == 64 and "symmetric" in err


class TestCensusAndTheorems:
    def test_census(self, capsys, tmp_path):
        cat = tmp_path / "c.g6"
        cat.write_text("C~\nbad!\nC`\n")
        out = tmp_path / "out.jsonl"
        png = tmp_path / "sum.png"
        code, _, err = run(
            capsys, "census", str(cat), "--out", str(out), "--ssp-trials", "2", "--seed", "5",
            "--plot", str(png),
        )
        lines = out.read_text().splitlines()
        assert code == 1 and len(lines) == 2 and "seed=5" in err
        assert json.loads(lines[1])["ssp_evidence"]["trials"] == 2
        assert png.exists()

    def test_census_bad_jobs(self, capsys, tmp_path):
        with pytest.raises(SystemExit) as exc:
            main(["census", "x", "--jobs", "0"])
        assert exc.value.code == 64

    def test_theorems(self, capsys):
        code, out, _ = run(capsys, "theorems", "--filter", "prism")
        assert code == 0 and out.startswith("PASS prism")

    def test_theorems_list_and_no_match(self, capsys):
        code, out, _ = run(capsys, "theorems", "--list")
        assert code == 0 and "dup-criterion" in out
        code, _, _ = run(capsys, "theorems", "--filter", "nope")
        assert code == 64


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "barbellkit", "barbell", "check", "C`", "--json"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["verdict"] == "admits"

import json

import pytest

from hyperlap import complete_hypergraph, write_hypergraph
from hyperlap.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_spectrum_k63(capsys):
    code, out, _ = run(capsys, "spectrum", "--complete", "6", "3", "--s", "1", "--format", "json")
    assert code == 0
    rec = json.loads(out)["records"][0]
    assert rec["lambda1"] == pytest.approx(1.2) and rec["lambdaMax"] == pytest.approx(1.2)
    assert len(rec["eigenvalues"]) == 6


def test_spectrum_k74_s3(capsys):
    code, out, _ = run(capsys, "spectrum", "--complete", "7", "4", "--s", "3")
    assert code == 0
    assert "lambda1=0.375" in out and "lambdaMax=1.75" in out


def test_spectrum_bad_s(capsys):
    code, _, err = run(capsys, "spectrum", "--complete", "6", "3", "--s", "5")
    assert code == 2 and "s must lie" in err


def test_spectrum_triplets(tmp_path, capsys):
    path = tmp_path / "g.txt"
    code, _, _ = run(capsys, "spectrum", "--complete", "6", "3", "--s", "1", "--export-triplets", str(path))
    assert code == 0
    assert path.read_text().startswith("# dim 6\n0 1 4")


def test_table1(capsys):
    code, out, _ = run(capsys, "table1", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("cell,paper,computed,fraction")
    assert len(lines) == 1 + 36
    row = next(l for l in lines if l.startswith("K_7^5 l1^(3)"))
    assert ",5/8," in row and row.endswith("pass")
    row = next(l for l in lines if l.startswith("K_6^5 lmax^(4)"))
    assert ",-," in row


def test_walk_exact(capsys):
    code, out, _ = run(capsys, "walk", "--complete", "6", "3", "--s", "2", "--alpha", "0.5", "--k", "10", "--exact")
    assert code == 0 and "status=pass" in out


def test_walk_directed_alpha_zero(capsys):
    code, _, err = run(capsys, "walk", "--complete", "6", "3", "--s", "2", "--alpha", "0", "--exact")
    assert code == 2 and "vacuous" in err


def test_walk_monte_carlo_with_trace(tmp_path, capsys):
    trace = tmp_path / "walks.jsonl"
    code, out, _ = run(capsys, "walk", "--complete", "6", "3", "--s", "1", "--walks", "20000", "--k", "3",
                       "--seed", "4", "--tv-tolerance", "0.03", "--trace", str(trace), "--trace-limit", "5")
    assert code == 0 and "seed=4" in out
    recs = [json.loads(l) for l in trace.read_text().splitlines()]
    assert len(recs) == 5 and all(len(r["stops"]) == 4 for r in recs)


def test_diameter_bound(capsys):
    code, out, _ = run(capsys, "diameter", "--complete", "6", "4", "--s", "2", "--bound", "--format", "json")
    assert code == 0
    rec = json.loads(out)["records"][0]
    assert rec["measured"] == 2 and rec["bound"] == 3 and rec["status"] is True


def test_expansion_from_file(tmp_path, capsys):
    path = tmp_path / "H.hg"
    write_hypergraph(complete_hypergraph(6, 4), path)
    code, out, _ = run(capsys, "expansion", "--input", str(path), "--s", "2", "--t", "1",
                       "--trials", "100", "--seed", "7")
    assert code == 0 and "satisfied=100/100" in out


def test_verify_all_to_file(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify-all", "--random", "6", "4", "0.6", "3", "--format", "json",
                       "--out", str(out_path))
    assert code == 0 and out == ""
    recs = json.loads(out_path.read_text())["records"]
    assert all(r["status"] for r in recs)
    assert {r["check"] for r in recs} >= {"eigen_count", "zero_mult_components", "sigma0_one"}


def test_bad_input_file(tmp_path, capsys):
    path = tmp_path / "bad.hg"
    path.write_text("3 3\n0 1 1\n")
    code, _, err = run(capsys, "spectrum", "--input", str(path))
    assert code == 2 and "line 2" in err


def test_missing_input(capsys):
    code, _, err = run(capsys, "spectrum")
    assert code == 2 and "no input" in err


def test_json_byte_identical(capsys):
    argv = ("expansion", "--random", "7", "4", "0.5", "2", "--trials", "20", "--seed", "3", "--format", "json")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second

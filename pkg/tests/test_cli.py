import csv
import json

import pytest

from frslab.cli import main, rational


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, (json.loads(out.out) if out.out.strip() else None), out.err


def test_encode_zero(capsys):
    code, rep, _ = run(capsys, "encode", "--message", "0")
    assert code == 0
    assert rep["results"][0]["word"] == [[0, 0, 0]] * 4
    assert rep["config"]["version"]


def test_encode_bad_degree(capsys):
    code, _, err = run(capsys, "encode", "--message", "1,2,3,4")
    assert code == 2 and "degree" in err


def test_bad_code_parameters(capsys):
    code, _, err = run(capsys, "encode", "--q", "13", "--k", "3", "--s", "3", "--n", "5", "--message", "1")
    assert code == 2 and "n*s" in err


def test_decimal_rational_rejected(capsys):
    with pytest.raises(SystemExit) as ex:
        main(["oracle", "--word", "[[0,0,0],[0,0,0],[0,0,0],[0,0,0]]", "--rho", "0.5"])
    assert ex.value.code == 2


def test_rational_parser():
    assert rational("3/8").denominator == 8
    assert rational("2") == 2


def test_oracle_and_decode(capsys):
    _, enc, _ = run(capsys, "encode", "--message", "[1,2,3]")
    word = json.dumps(enc["results"][0]["word"])
    code, rep, _ = run(capsys, "oracle", "--word", word, "--rho", "1/2")
    assert code == 0 and rep["results"][0]["list"] == [[1, 2, 3]]
    code, rep, _ = run(capsys, "decode-gw", "--word", word, "--m", "2")
    assert rep["results"][0]["subspace"]["offset"] == [1, 2, 3]
    assert rep["results"][0]["radius"] == "1/2"


def test_word_from_file(tmp_path, capsys):
    path = tmp_path / "y.json"
    path.write_text(json.dumps([[1, 1, 1]] * 4))
    code, rep, _ = run(capsys, "oracle", "--word", f"@{path}", "--rho", "1/2")
    assert code == 0 and rep["results"][0]["list"] == [[1]]


def test_prune(capsys):
    _, enc, _ = run(capsys, "encode", "--message", "[4,0,9]")
    word = json.dumps(enc["results"][0]["word"])
    code, rep, _ = run(capsys, "prune", "--word", word, "--seed", "3", "--trials", "64")
    assert code == 0
    assert rep["results"][0]["codewords"] == [[4, 0, 9]]
    assert rep["results"][0]["rho"] == "1/2"


def test_verify_cz_theorem(capsys):
    code, rep, _ = run(capsys, "verify", "cz-theorem", "--q", "13", "--k", "3", "--s", "3", "--n", "4",
                       "--t", "2", "--samples", "500", "--seed", "7")
    assert code == 0
    assert rep["summary"] == {"total": 500, "holds": 500, "violations": 0}


def test_verify_requires_seed(capsys):
    code, _, err = run(capsys, "verify", "gk", "--samples", "3")
    assert code == 2 and "--seed" in err


@pytest.mark.parametrize("bound", ["gk", "srivastava", "cz-edge", "wronskian", "gw", "prune"])
def test_verify_suites(capsys, bound):
    code, rep, _ = run(capsys, "verify", bound, "--samples", "5", "--seed", "1", "--trials", "64")
    assert code == 0 and rep["summary"]["violations"] == 0


def test_verify_params(capsys):
    code, rep, _ = run(capsys, "verify", "params", "--eps", "1/2", "1/4")
    assert code == 0 and rep["summary"]["total"] == 40


def test_counterexample(capsys):
    code, rep, _ = run(capsys, "counterexample", "verify", "--q", "13", "--k", "5", "--s", "2", "--n", "6",
                       "--m", "2", "--ell", "2")
    assert code == 0
    res = rep["results"][0]
    assert res["details"]["G_size"] == 4
    assert max(res["family"]["per_coordinate_sizes"]) <= 2
    code, rep, _ = run(capsys, "counterexample", "build", "--eps", "5/12", "--B", "1,2")
    assert code == 0 and rep["results"][0]["m"] == 2


def test_counterexample_missing_ell(capsys):
    code, _, err = run(capsys, "counterexample", "build", "--m", "2")
    assert code == 2


def test_fuzz(capsys):
    code, rep, _ = run(capsys, "fuzz", "--t", "2", "--seed", "5", "--restarts", "3", "--steps", "30")
    assert code == 0 and rep["summary"]["total"] == 3
    assert all(len(r["word"]) == 4 for r in rep["results"])


def test_violation_exit_code(monkeypatch, capsys):
    from frslab import experiments
    from frslab.bounds import BoundReport

    monkeypatch.setattr(experiments, "suite_gk", lambda *a, **k: [BoundReport("gk", 5, 1, False, r=1, seed=9)])
    code, rep, _ = run(capsys, "verify", "gk", "--samples", "1", "--seed", "1")
    assert code == 1
    assert rep["summary"]["witnesses"][0]["seed"] == 9


def test_out_and_csv(tmp_path, capsys):
    out, table = tmp_path / "r.json", tmp_path / "r.csv"
    code = main(["verify", "cz-theorem", "--t", "1", "--samples", "4", "--seed", "2", "--out", str(out), "--csv", str(table)])
    assert code == 0
    rep = json.loads(out.read_text())
    rows = list(csv.reader(table.open()))
    assert rows[0][:4] == ["bound", "lhs", "rhs", "holds"]
    assert len(rows) == 1 + rep["summary"]["total"]


def test_reports_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        main(["verify", "srivastava", "--samples", "5", "--seed", "11", "--out", str(p)])
    assert a.read_bytes() == b.read_bytes()

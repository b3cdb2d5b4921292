import json

import pytest

from shadowspec.cli import main, parse_range


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_range():
    assert parse_range("3..7") == (3, 7)


def test_sigma_csv_row(capsys):
    code, out, _ = run(capsys, "sigma", "--k", "50", "--t", "14", "--format", "csv")
    assert code == 0
    rows = out.splitlines()
    assert len(rows) == 14
    assert rows[11] == "534,534;544,545;552,555;558,600"


def test_sigma_text_and_json(capsys):
    code, out, _ = run(capsys, "sigma", "--k", "3", "--range", "3..3")
    assert code == 0 and out == "[6,9]\n"
    code, out, _ = run(capsys, "sigma", "--k", "3", "--t", "2", "--format", "json")
    data = json.loads(out)
    assert data == {"k": 3, "rows": [{"t": 1, "runs": [[3, 3]]}, {"t": 2, "runs": [[5, 6]]}]}


def test_sigma_refuses_large_t(capsys):
    code, _, err = run(capsys, "sigma", "--k", "5", "--t", "7")
    assert code == 2
    assert json.loads(err)["reason"] == "outside supported domain"


def test_fig1(capsys):
    code, out, _ = run(capsys, "fig1", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "t,lo,hi"
    assert "12,558,600" in lines and "1,50,50" in lines


def test_psi_and_phi(capsys):
    code, out, _ = run(capsys, "psi", "--k", "50", "--format", "json")
    assert code == 0 and json.loads(out) == [{"k": 50, "psi": 557, "t_star": 12}]
    code, out, _ = run(capsys, "phi", "--range", "4..6", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["n,phi,missing_size", "4,5,", "5,9,9", "6,16,19"]


def test_sn(capsys):
    code, out, _ = run(capsys, "sn", "--n", "9", "--range", "119..123", "--format", "json")
    assert code == 0
    status = {r["m"]: r["status"] for r in json.loads(out)}
    assert status == {119: "member", 120: "non-member", 121: "member", 122: "member", 123: "non-member"}
    code, out, _ = run(capsys, "sn", "--n", "6", "--range", "16..17", "--format", "json")
    assert [r["status"] for r in json.loads(out)] == ["non-member", "member"]


@pytest.mark.parametrize("fmt", ["text", "json"])
def test_witness_verify_round_trip(capsys, tmp_path, fmt):
    path = tmp_path / f"w.{fmt}"
    code, _, _ = run(capsys, "witness", "mac", "--n", "9", "--m", "110", "--format", fmt, "--out", str(path))
    assert code == 0
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0 and "FAIL" not in out
    shadow = tmp_path / f"s.{fmt}"
    code, _, _ = run(capsys, "witness", "shadow", "--s", "12", "--t", "3", "--k", "4", "--format", fmt, "--out", str(shadow))
    assert code == 0
    code, out, _ = run(capsys, "verify", str(shadow), "--format", "json")
    assert code == 0 and json.loads(out)["pass"]


def test_verify_detects_tampering(capsys, tmp_path):
    path = tmp_path / "w.txt"
    run(capsys, "witness", "mac", "--n", "7", "--m", "20", "--out", str(path))
    lines = path.read_text().splitlines()
    path.write_text("\n".join(lines[:-1]) + "\n")
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 1
    assert "FAIL size" in out and "FAIL maximal" in out


def test_verify_parse_error(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("not a witness\n")
    code, _, err = run(capsys, "verify", str(path))
    assert code == 4 and json.loads(err)["reason"] == "parse error"
    code, _, _ = run(capsys, "verify", str(tmp_path / "missing.txt"))
    assert code == 4


def test_bad_arguments(capsys):
    code, _, err = run(capsys, "sigma", "--range", "5..2", "--k", "3")
    assert code == 4 and json.loads(err)["reason"] == "bad arguments"
    code, _, _ = run(capsys, "sigma")
    assert code == 4


def test_unachievable_mac(capsys):
    code, out, err = run(capsys, "witness", "mac", "--n", "9", "--m", "120")
    assert code == 2 and out == ""
    reason = json.loads(err)
    assert reason["reason"] == "certified non-size" and reason["gap"] == 6


def test_unachievable_shadow(capsys):
    code, _, err = run(capsys, "witness", "shadow", "--s", "7", "--t", "4", "--k", "3")
    assert code == 2 and json.loads(err)["reason"] == "not in sigma"


def test_budget_refusal(capsys):
    code, _, err = run(capsys, "oracle", "sigma", "--k", "4", "--range", "5..5", "--budget", "1000")
    assert code == 3 and json.loads(err)["reason"] == "budget"


def test_oracles_agree(capsys):
    code, out, _ = run(capsys, "oracle", "sigma", "--k", "3", "--t", "4", "--format", "json")
    assert code == 0 and all(r["agree"] for r in json.loads(out))
    code, out, _ = run(capsys, "oracle", "S", "--n", "5", "--format", "json")
    assert code == 0 and len(json.loads(out)) == 10
    code, out, _ = run(capsys, "oracle", "kk", "--n", "6", "--k", "3", "--range", "1..8", "--format", "csv")
    assert code == 0 and out.splitlines()[0] == "t,agree,kk,exhaustive"


def test_output_is_deterministic(capsys):
    first = run(capsys, "witness", "mac", "--n", "10", "--m", "240", "--format", "json")
    second = run(capsys, "witness", "mac", "--n", "10", "--m", "240", "--format", "json")
    assert first == second and first[0] == 0

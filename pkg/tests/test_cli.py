import json

import pytest

from umbra.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_abel(capsys):
    assert run(capsys, "compute", "--family", "abel", "--n", "2", "--b", "1") == (0, "x^2 - 2*x\n", "")


def test_compute_abel_rational_b(capsys):
    code, out, _ = run(capsys, "compute", "--family", "abel", "--n", "3", "--b", "1/2")
    assert code == 0 and out == "x^3 - 3*x^2 + (9/4)*x\n"


def test_compute_stirling2(capsys):
    assert run(capsys, "compute", "--family", "stirling2", "--l", "4", "--n", "2")[:2] == (0, "7\n")


def test_compute_abel_zero_b(capsys):
    code, out, err = run(capsys, "compute", "--family", "abel", "--n", "2", "--b", "0")
    assert code == 2 and out == "" and "b != 0" in err


def test_compute_missing_flag(capsys):
    code, _, err = run(capsys, "compute", "--family", "s-poly", "--n", "2")
    assert code == 2 and "--mu" in err


def test_compute_formats(capsys):
    code, out, _ = run(capsys, "compute", "--family", "frobenius-euler", "--n", "1", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["family"] == "frobenius-euler"
    assert doc["params"] == {"n": 1, "order": 1}
    assert doc["value"] == "x + 1/(L-1)"
    assert doc["coeffs"] == ["1/(L-1)", "1"]
    code, out, _ = run(capsys, "compute", "--family", "fe-number", "--n", "2", "--format", "latex")
    assert code == 0 and out == "\\frac{\\lambda+1}{(\\lambda-1)^{2}}\n"


def test_compute_eval_lambda(capsys):
    code, out, _ = run(capsys, "compute", "--family", "fe-number", "--n", "2", "--eval-lambda", "2")
    assert (code, out) == (0, "3\n")
    code, out, _ = run(capsys, "compute", "--family", "changhee2", "--n", "1", "--eval-lambda=-1/2")
    assert (code, out) == (0, "2*x + 2\n")


def test_compute_eval_lambda_pole(capsys):
    code, out, err = run(capsys, "compute", "--family", "fe-number", "--n", "1", "--eval-lambda", "1")
    assert code == 2 and out == "" and "pole" in err
    code, _, err = run(capsys, "compute", "--family", "changhee2", "--n", "1", "--eval-lambda=-1")
    assert code == 2 and "pole" in err


def test_table_stirling1_csv(capsys):
    code, out, _ = run(capsys, "table", "--family", "stirling1", "--rows", "4", "--format", "csv")
    assert code == 0
    assert out.splitlines()[-1] == "4,0,-6,11,-6,1"


def test_table_fe_numbers(capsys):
    code, out, _ = run(capsys, "table", "--family", "fe-numbers", "--rows", "2")
    assert (code, out) == (0, "1, 1/(L-1), (L+1)/(L-1)^2\n")


def test_table_other_formats(capsys):
    code, out, _ = run(capsys, "table", "--family", "stirling2", "--rows", "3", "--format", "json")
    assert code == 0 and json.loads(out)["rows"][3] == [0, 1, 3, 1]
    code, out, _ = run(capsys, "table", "--family", "stirling2", "--rows", "2", "--format", "latex")
    assert code == 0 and out.startswith("\\begin{tabular}")


def test_table_zero_rows(capsys):
    assert run(capsys, "table", "--family", "stirling2", "--rows", "0")[0] == 2


def test_verify_t4(capsys):
    code, out, _ = run(capsys, "verify", "--id", "T4", "--n-max", "5")
    assert code == 0 and out.startswith("T4 [must_hold] PASS: 15 pass")


def test_verify_t9(capsys):
    argv = ["verify", "--id", "T9", "--n-max", "3", "--b", "1", "--b", "1/2", "--a-max", "2"]
    assert run(capsys, *argv)[0] == 0


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--all", "--format", "json")
    assert code == 0
    docs = {d["id"]: d for d in json.loads(out)}
    assert "T7" not in docs
    assert docs["E43"]["expectation"] == "probe"
    assert {i["status"] for i in docs["E43"]["instances"]} == {"fail"}
    assert all("ms" not in i for d in docs.values() for i in d["instances"])


def test_verify_timing_flag(capsys):
    code, out, _ = run(capsys, "verify", "--id", "E41", "--format", "json", "--timing")
    assert code == 0 and all("ms" in i for i in json.loads(out)[0]["instances"])


def test_verify_deterministic_across_jobs(capsys):
    outputs = []
    for jobs in ("1", "2"):
        for fmt in ("text", "csv", "json"):
            outputs.append(run(capsys, "verify", "--all", "--format", fmt, "--jobs", jobs)[1])
    assert outputs[:3] == outputs[3:]


def test_verify_bad_grid(capsys):
    assert run(capsys, "verify", "--id", "T9", "--b", "0")[0] == 2
    assert run(capsys, "verify", "--id", "T7")[0] == 2
    assert run(capsys, "verify", "--id", "T4", "--jobs", "0")[0] == 2


def test_verify_trunc_guard_env(capsys, monkeypatch):
    monkeypatch.setenv("UMBRA_TRUNC_GUARD", "6")
    assert run(capsys, "verify", "--id", "T8")[0] == 0


def test_out_file(capsys, tmp_path):
    target = tmp_path / "report.csv"
    code, out, _ = run(capsys, "verify", "--id", "E51", "--format", "csv", "--out", str(target))
    assert code == 0 and out == ""
    lines = target.read_text().splitlines()
    assert lines[0] == "id,expectation,params,status,witness"
    assert len(lines) == 12


@pytest.mark.parametrize("argv", [
    ["compute", "--family", "abel", "--n", "2", "--b", "1", "--bogus"],
    ["verify"],
    ["verify", "--id", "T4", "--all"],
    ["frobnicate"],
    ["compute", "--family", "nope", "--n", "1"],
])
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2

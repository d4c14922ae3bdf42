import json

import pytest

from skewinv.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_nf(capsys):
    code, out, _ = run(capsys, "nf", "--algebra", "V n=3", "--expr", "x2*x1")
    assert code == 0 and out.strip() == "-x1*x2"


def test_member_exit_codes(capsys):
    base = ["member", "--algebra", "V n=2", "--group", "s = (1 2)"]
    code, out, _ = run(capsys, *base, "--expr", "x1 - x2", "--output", "json")
    assert code == 0 and json.loads(out)["member"] is True
    code, out, _ = run(capsys, *base, "--expr", "x1 + x2", "--output", "json")
    assert code == 1 and json.loads(out)["member"] is False
    code, _, _ = run(capsys, *base, "--expr", "x1^2", "--certificate")
    assert code == 0


def test_ideal_dims_json(capsys):
    code, out, _ = run(capsys, "ideal-dims", "--algebra", "V n=4", "--group", "(1 2)(3 4); (1 3)(2 4)",
                       "-D", "6", "--output", "json")
    assert code == 0
    assert json.loads(out)["quotient_A"] == [1, 4, 9, 9, 3, 0, 0]


def test_trace_and_molien(capsys):
    code, out, _ = run(capsys, "trace", "--algebra", "V n=2", "--group", "(1 2)", "-N", "6", "--output", "json")
    assert code == 0
    forms = {t["element"]: t["form"] for t in json.loads(out)["traces"]}
    assert forms["(1 2)"] == "1/(1+t^2)"
    code, out, _ = run(capsys, "molien", "--algebra", "V n=2", "--group", "(1 2)", "-N", "6")
    assert code == 0


def test_hilbert(capsys):
    code, out, _ = run(capsys, "hilbert", "--algebra", "V n=2", "-N", "4", "--output", "json")
    assert code == 0 and "1" in out


def test_pertinency(capsys):
    code, out, _ = run(capsys, "pertinency", "--algebra", "V n=2", "--group", "(1 2)", "--output", "json")
    assert code == 0 and json.loads(out)["conclusion"] == "p = 2"


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "klein.txt"
    cfg.write_text("algebra: V n=4\nbound: 8\ngroup: (1 2)(3 4); (1 3)(2 4)\n")
    code, out, _ = run(capsys, "ideal-dims", str(cfg), "-D", "5", "--output", "json")
    assert code == 0 and json.loads(out)["quotient_A"][-1] == 0


def test_derive(tmp_path, capsys):
    code, out, _ = run(capsys, "derive", "--builtin", "pair-swap:1", "--output", "json")
    assert code == 0 and json.loads(out)["ok"]
    script = tmp_path / "bad.txt"
    script.write_text("algebra: V n=2\ngroup: s = (1 2)\nd = x1*f - f*x2\nassert d == x1 + x2\n")
    code, out, _ = run(capsys, "derive", str(script), "--output", "json")
    assert code == 1 and json.loads(out)["first_failure"] == 4


def test_scenario_list(capsys):
    code, out, _ = run(capsys, "scenario", "--list")
    assert code == 0 and "thm5.2" in out


def test_scenario_run(capsys):
    code, out, _ = run(capsys, "scenario", "prop3.6", "--output", "json")
    assert code == 0


@pytest.mark.parametrize("argv", [
    ["nf", "--algebra", "Q n=3", "--expr", "x1"],
    ["nf", "--algebra", "V n=3", "--expr", "x1 +"],
    ["member", "--algebra", "V n=2", "--expr", "x1"],
    ["scenario", "no-such-scenario"],
    ["derive", "/nonexistent/script"],
    ["derive", "--builtin", "squares:x:1:2"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err

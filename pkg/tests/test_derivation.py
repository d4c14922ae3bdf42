import pytest

from skewinv.derivation import DerivationError, DerivationScript, evaluate, run_derivation

HEAD = "algebra: V n=2\nbound: 4\ngroup: s = (1 2)\n"


def test_certification_flags(v2_swap):
    S = v2_swap.skew()
    assert evaluate("f", S).ideal
    assert evaluate("x1*f - f*x2", S).ideal
    assert not evaluate("x1 - x2", S).ideal
    assert not evaluate("f + x1", S).ideal
    assert evaluate("f + 0", S).ideal
    assert evaluate("3*f*x1/2", S, v2_swap.names).ideal


def test_simple_script():
    rep = run_derivation(HEAD + "d = x1*f - f*x2\nassert d == x1 - x2\nassert d in A\nassert d in ideal\noracle d\n")
    assert rep.ok
    assert rep.certified("d")
    assert str(rep.value("d")) == "(x1 - x2)#e"
    assert rep.to_json()["first_failure"] is None


def test_failed_equality_reports_line():
    rep = run_derivation(HEAD + "d = x1*f - f*x2\nassert d == x1 + x2\n")
    assert not rep.ok
    assert rep.first_failure.step.line == 5
    assert "difference" in rep.first_failure.message


def test_uncertified_membership_claim_fails():
    rep = run_derivation(HEAD + "u = x1 - x2\nassert u in ideal\n")
    assert rep.first_failure.step.line == 5


def test_oracle_on_uncertified_value():
    rep = run_derivation(HEAD + "u = x1 + x2\noracle u\n")
    assert rep.first_failure.message == "not in the ideal"
    rep = run_derivation(HEAD + "u = x1 - x2\noracle u\n")
    assert rep.ok


def test_division_by_nonscalar():
    rep = run_derivation(HEAD + "u = f/x1\n")
    assert "nonzero scalar" in rep.first_failure.message


def test_parse_errors():
    with pytest.raises(DerivationError, match="4:1"):
        DerivationScript.parse(HEAD + "this is not a step\n")
    rep = run_derivation(HEAD + "u = x1 +* x2\n")
    assert rep.first_failure.message.startswith("4: ")
    rep = run_derivation(HEAD + "u = x7\n")
    assert "unknown name" in rep.first_failure.message


def test_reserved_names():
    rep = run_derivation(HEAD + "s = x1\n")
    assert "reserved" in rep.first_failure.message


def test_global_oracle_flag():
    rep = run_derivation(HEAD + "d = x1*f - f*x2\n", oracle=True)
    assert rep.ok and rep.results[0].oracle


def test_text_report():
    text = run_derivation(HEAD + "d = x1*f - f*x2\n").to_text()
    assert "(in ideal)" in text and text.startswith("derivation script: ok")

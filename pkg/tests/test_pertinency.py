import pytest

from skewinv.action import permutation
from skewinv.algebra import preset
from skewinv.config import build_group
from skewinv.pertinency import (PertinencyError, _conclude, certify_p_geq_2, finite_dim_check, gk_growth_estimate,
                                monotonicity_check, pertinency_report, restrict, support_upper_bound,
                                to_square_poly)
from skewinv.skew import SkewAlgebra

def test_monotonicity_needs_subgroup():
    A = preset("V", 6, n=3)
    G, _ = build_group("(1 2 3)", A)
    H = restrict(G, [permutation("(1 2)", A)])
    with pytest.raises(PertinencyError):
        monotonicity_check(A, H, G, 3)


def test_certificate_for_s3_on_v3():
    A = preset("V", 6, n=3)
    G, _ = build_group("S3", A)
    cert = certify_p_geq_2(A, G, oracle=True)
    assert cert.ok and cert.vdm_member
    assert all(img for _, _, img in cert.substitutions)


def test_to_square_poly():
    A = preset("V", 6, n=2)
    assert str(to_square_poly(A.free.parse("x1^2*x2^2 - x2^4"), A)) == "y1*y2 - y2^2"
    assert to_square_poly(A.free.parse("x1*x2"), A) is None


def test_finite_dim_klein():
    A = preset("V", 8, n=4)
    G, _ = build_group("(1 2)(3 4); (1 3)(2 4)", A)
    res = finite_dim_check(SkewAlgebra(A, G), 8)
    assert res.finite and res.total == 26 and res.cutoff == 5
    assert res.dims[:6] == [1, 4, 9, 9, 3, 0]


@pytest.mark.parametrize("dims,window,want", [
    ([1, 4, 10, 0, 0, 0], 3, "gk0"),
    ([1, 2, 3, 3, 3, 3], 3, "bounded"),
    ([1, 2, 3, 4, 5, 6], 4, "degree-1"),
    ([1, 3, 6, 10, 15], 4, "degree-2"),
    ([1, 3, 7, 20, 1], 4, "undetermined"),
])
def test_growth_estimate(dims, window, want):
    assert gk_growth_estimate(dims, window) == want


def test_growth_window_checked():
    with pytest.raises(PertinencyError):
        gk_growth_estimate([1, 2], 4)


@pytest.mark.parametrize("lower,upper,gk,want", [
    (3, 3, 3, "p = 3"), (2, 3, 3, "2 or 3"), (2, 4, 4, "2 <= p <= 4"), (2, None, None, "p >= 2"),
    (None, 3, 3, "evidence-only"),
])
def test_conclusions(lower, upper, gk, want):
    assert _conclude(lower, upper, gk) == want


def test_support_upper_bound():
    A = preset("V", 4, n=4)
    G, _ = build_group("(1 2)", A)
    assert support_upper_bound(G)[0] == 2
    T, _ = build_group("diag(1, 1, 1, 1)", A)
    assert support_upper_bound(T) is None


def test_report_for_transposition_on_v2():
    A = preset("V", 6, n=2)
    G, _ = build_group("(1 2)", A)
    rep = pertinency_report(A, G)
    assert rep.conclusion == "p = 2" and rep.isolated_singularity
    assert rep.to_json()["dims"][:3] == [1, 1, 0]


def test_report_for_s3_on_v3():
    A = preset("V", 6, n=3)
    G, _ = build_group("S3", A)
    rep = pertinency_report(A, G, D=6)
    assert rep.lower_bound == 2 and rep.upper_bound == 2
    assert rep.conclusion == "p = 2"
    assert not rep.isolated_singularity

from hypothesis import given, settings, strategies as st
import pytest

from skewinv.rewrite import DegreeBoundError
from skewinv.skew import (direct_slice_dims, is_member, quotient_dims, quotient_skew_dims,
                          sandwich_certificate)


def skew_elements(S, max_deg=2):
    A, G = S.A, S.G
    words = st.lists(st.integers(0, A.ngens - 1), max_size=max_deg).map(tuple)
    terms = st.tuples(words, st.integers(0, len(G) - 1), st.integers(-2, 2))
    return st.lists(terms, max_size=3).map(
        lambda ts: sum((S.embed(A.free.word(w), g) * c for w, g, c in ts), S.zero()))


@pytest.mark.property
@settings(max_examples=100)
@given(data=st.data())
def test_associativity(v3_s3, data):
    S = v3_s3.skew()
    u, v, w = (data.draw(skew_elements(S)) for _ in range(3))
    assert (u * v) * w == u * (v * w)


def test_multiplication_rule(v2_swap):
    S = v2_swap.skew()
    s = S.group_element(v2_swap.names["s"])
    x1, x2 = (S.embed(S.A.gen(i)) for i in range(2))
    # (1#s)(x1#e) = s(x1)#s = x2#s
    assert s * x1 == x2 * s
    assert s * s == S.embed(S.A.free.one())


def test_absorption_and_f_squared(v3_s3):
    S = v3_s3.skew()
    f = S.fG()
    for g in range(len(S.G)):
        assert S.group_element(g) * f == f == f * S.group_element(g)
    assert f * f == f * len(S.G)


def test_membership_examples(v2_swap, v4_klein):
    S = v2_swap.skew()
    assert is_member("x1 - x2", S).member
    assert not is_member("x1 + x2", S).member
    K = v4_klein.skew()
    assert is_member("x1^4", K).member
    assert not is_member("x1^2", K).member


def test_membership_certificate_replays(v2_swap):
    S = v2_swap.skew()
    res = is_member("x1^2", S, certificate=True)
    assert res.member and res.certificate
    u = S.parse("x1^2")
    total = S.zero()
    F = S.A.free
    for c, a, b in res.certificate:
        total = total + S.sandwich(F.word(a), F.word(b)) * c
    assert total == u
    assert sandwich_certificate(S, S.parse("x1 + x2")) is None


def test_quotient_dims_match_direct_span(v4_klein):
    S = v4_klein.skew()
    for d in range(5):
        total, inter = direct_slice_dims(S, d)
        n = S.A.hilbert_function(d)
        assert n - inter == quotient_dims(S, d)[d]
        assert len(S.G) * n - total == quotient_skew_dims(S, d)[d]


def test_klein_dims(v4_klein):
    assert quotient_dims(v4_klein.skew(), 6) == [1, 4, 9, 9, 3, 0, 0]


def test_degree_bound(v2_swap):
    S = v2_swap.skew()
    with pytest.raises(DegreeBoundError):
        is_member("x1^7", S)


def test_display_and_components(v2_swap):
    S = v2_swap.skew()
    u = S.parse("x1") * S.group_element(v2_swap.names["s"]) + S.parse("x2")
    assert not u.in_A()
    assert u.identity_component() == S.A.gen(1)
    assert "#s" in str(u)

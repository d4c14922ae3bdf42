from hypothesis import given, settings, strategies as st
import pytest

from skewinv.commutative import (CommPoly, coprime_to_linear_factors, hhat, hhat_sum, parse_comm,
                                 rel_prime_by_substitution, vdm)


def polys(n):
    expo = st.tuples(*[st.integers(0, 2)] * n)
    return st.dictionaries(expo, st.integers(-3, 3), max_size=4).map(
        lambda d: sum((CommPoly.const(n, c) * _mono(n, e) for e, c in d.items()), CommPoly(n)))


def _mono(n, e):
    acc = CommPoly.const(n, 1)
    for i, k in enumerate(e):
        acc = acc * CommPoly.var(n, i) ** k
    return acc


@pytest.mark.property
@settings(max_examples=100)
@given(p=polys(3), q=polys(3), r=polys(3))
def test_substitution_is_a_ring_homomorphism(p, q, r):
    for i in range(3):
        assert (p * q).substitute(i, r) == p.substitute(i, r) * q.substitute(i, r)
        assert (p + q).substitute(i, r) == p.substitute(i, r) + q.substitute(i, r)


def test_vdm():
    assert vdm(2) == parse_comm("y1 - y2", 2)
    assert vdm(3).degree() == 3
    with pytest.raises(ValueError):
        vdm(1)


def test_vdm_not_coprime_to_itself():
    ok, wit = rel_prime_by_substitution(vdm(3))
    assert not ok
    assert all(not img for _, _, img in wit)


def test_hhat_values():
    assert hhat(2, "Vn", 1, 2) == parse_comm("y1", 2)
    assert hhat(3, "sklyanin", 1, 2) == parse_comm("(y1 - y3/2)*(y1 - y3)*(y2 - y3)", 3)
    with pytest.raises(ValueError):
        hhat(4, "sklyanin", 1, 2)
    with pytest.raises(ValueError):
        hhat(3, "Vn", 2, 1)


@pytest.mark.parametrize("n", [3, 4])
def test_hhat_sum_is_coprime_to_vdm(n):
    ok, _ = rel_prime_by_substitution(hhat_sum(n, "Vn"))
    assert ok


def test_sklyanin_hhat_sum_is_coprime_to_vdm():
    ok, _ = rel_prime_by_substitution(hhat_sum(3, "sklyanin"))
    assert ok


def test_coprime_to_linear_factors():
    h = parse_comm("y1^2 + y2^2", 2)
    ok, _ = coprime_to_linear_factors(h, [parse_comm("y1 - y2", 2), parse_comm("y1 + y2", 2)])
    assert ok
    ok, _ = coprime_to_linear_factors(h - parse_comm("2*y2^2", 2), [parse_comm("y1 - y2", 2)])
    assert not ok
    with pytest.raises(ValueError):
        coprime_to_linear_factors(h, [parse_comm("y1^2", 2)])

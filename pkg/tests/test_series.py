from gmpy2 import mpq
from hypothesis import given, settings, strategies as st
import pytest

from skewinv.action import permutation
from skewinv.algebra import preset
from skewinv.config import build_group
from skewinv.scalar import CyclotomicField
from skewinv.series import (RationalForm, SeriesError, TruncatedSeries, expand, hdet, hilbert_series,
                            molien_hilbert, pade_reconstruct, reconstruct, reflection_number,
                            reflection_number_group, trace_form, trace_series)

Q = CyclotomicField(1)


def form(num, den):
    return RationalForm.build([mpq(c) for c in num], [mpq(c) for c in den], Q)


def test_expand_geometric():
    assert expand([1], [1, -1], 5) == TruncatedSeries([1] * 6, Q)
    assert expand([1], [1, 0, 1], 5) == TruncatedSeries([1, 0, -1, 0, 1, 0], Q)


def test_identity_trace_is_hilbert_series():
    A = preset("V", 8, n=3)
    G, _ = build_group("S3", A)
    assert trace_series(G[G.identity], A, 8) == hilbert_series(A, 8)
    assert trace_form(G[G.identity], A) == form([1], [1, -3, 3, -1])


def test_transposition_trace_on_v2():
    A = preset("V", 8, n=2)
    s = permutation("(1 2)", A)
    assert trace_form(s, A) == form([1], [1, 0, 1])
    assert reflection_number(s, A) == 2
    h = hdet(s, A)
    assert (h.hdet, h.shift, h.sign_exponent) == (1, 2, 2)


def test_three_cycle_on_v3():
    A = preset("V", 9, n=3)
    g = permutation("(1 2 3)", A)
    assert trace_form(g, A) == form([1], [1, 0, 0, -1])
    assert reflection_number(g, A) == 2
    assert hdet(g, A).hdet == 1


def test_reflection_number_group_needs_nontrivial_group():
    A = preset("V", 6, n=2)
    G, _ = build_group("(1 2)", A)
    assert reflection_number_group(G, A) == 2
    T, _ = build_group("diag(1, 1)", A)
    with pytest.raises(SeriesError):
        reflection_number_group(T, A)


@pytest.mark.property
@pytest.mark.parametrize("n,group", [(2, "(1 2)"), (3, "S3"), (3, "(1 2 3)"), (4, "(1 2)(3 4); (1 3)(2 4)")])
def test_molien_matches_invariant_dimensions(n, group):
    A = preset("V", 8, n=n)
    G, _ = build_group(group, A)
    res = molien_hilbert(G, A, 8)
    assert res.agrees
    assert all(c >= 0 and int(c) == c for c in res.direct)
    assert res.direct[0] == 1


@settings(max_examples=60)
@given(num=st.lists(st.integers(-3, 3), min_size=1, max_size=3),
       den=st.lists(st.integers(-3, 3), min_size=0, max_size=2))
def test_pade_recovers_random_rational_functions(num, den):
    if not any(num):
        num = [1]
    f = form(num, [1] + den)
    s = f.expand(12)
    assert reconstruct(s) == f
    assert pade_reconstruct(s, len(num) - 1, len(den)) == f


def test_pade_rejects_too_few_terms():
    with pytest.raises(SeriesError):
        pade_reconstruct(TruncatedSeries([1, 1, 1], Q), 2, 2)


def test_form_text_and_pole_order():
    f = form([1], [1, -2, 1])
    assert f.pole_order == 2 and f.reciprocal
    assert "(1-t)^2" in str(f)

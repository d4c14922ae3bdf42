from hypothesis import given, settings, strategies as st
import pytest

from skewinv.action import (ActionError, GradedAutomorphism, diagonal, group_closure, parse_cycles, permutation,
                            product_action, weighted_permutation)
from skewinv.algebra import preset, sign_twist_tensor, skew_polynomial
from skewinv.config import build_group
from skewinv.scalar import CyclotomicField

V3 = preset("V", 6, n=3)
S3, _ = build_group("S3", V3)
SK = preset("sklyanin", 6, a=1, b=2, c=3)
SK_C3, _ = build_group("(1 2 3)", SK)
CASES = [(V3, S3), (SK, SK_C3)]


def poly(A, max_deg=3):
    words = st.lists(st.integers(0, A.ngens - 1), max_size=max_deg).map(tuple)
    return st.dictionaries(words, st.integers(-3, 3), max_size=3).map(
        lambda d: A.nf(sum((A.free.word(w) * c for w, c in d.items()), A.free.zero())))


@pytest.mark.property
@pytest.mark.parametrize("A,G", CASES, ids=["S3 on V3", "C3 on S(1,2,3)"])
@settings(max_examples=100)
@given(data=st.data())
def test_action_is_a_homomorphism(A, G, data):
    p, q = data.draw(poly(A)), data.draw(poly(A))
    g = G[data.draw(st.integers(0, len(G) - 1))]
    h = G[data.draw(st.integers(0, len(G) - 1))]
    assert A.nf(g.act(A.nf(p * q))) == A.nf(A.nf(g.act(p)) * A.nf(g.act(q)))
    assert A.nf(g.compose(h).act(p)) == A.nf(g.act(A.nf(h.act(p))))


def test_group_orders_and_table():
    assert len(S3) == 6
    for a in range(6):
        assert S3.mul(a, S3.inverse[a]) == S3.identity
    klein, _ = build_group("(1 2)(3 4); (1 3)(2 4)", preset("V", 4, n=4))
    assert len(klein) == 4


def test_row_convention_and_composition():
    # g(x_i) = sum_j M[i][j] x_j; compose applies the right factor first
    s = permutation("(1 2)", V3)
    t = permutation("(2 3)", V3)
    x1 = V3.gen(0)
    assert s.act(x1) == V3.gen(1)
    assert s.compose(t).act(x1) == s.act(t.act(x1))


def test_parse_cycles():
    assert parse_cycles("(1 2 3)", 3) == [1, 2, 0]
    with pytest.raises(ActionError):
        parse_cycles("(1 4)", 3)


def test_non_automorphism_rejected():
    # a single transposition with a sign flip breaks the Sklyanin relations
    with pytest.raises(ActionError):
        GradedAutomorphism([[0, 1, 0], [1, 0, 0], [0, 0, -1]], SK)
    with pytest.raises(ActionError):
        GradedAutomorphism([[1, 0, 0], [1, 0, 0], [0, 0, 1]], V3)


def test_weighted_and_diagonal_elements():
    F = CyclotomicField(4)
    A = skew_polynomial(2, 4, field=F)
    g = diagonal([F.root(), F.root() ** 3], A)
    assert len(group_closure([g], A)) == 4
    w = weighted_permutation("(1 2)", [1, -1], A)
    assert len(group_closure([w], A)) == 4


def test_infinite_group_capped():
    A = skew_polynomial(2, 4)
    with pytest.raises(ActionError, match="cap"):
        group_closure([diagonal([2, 1], A)], A, cap=50)


def test_product_action_on_twisted_tensor():
    A = skew_polynomial(4, 3, names=("y1", "y2", "y3", "y4"))
    B = skew_polynomial(4, 3, names=("z1", "z2", "z3", "z4"))
    GA, _ = build_group("(1 2 3 4)", A)
    GB, _ = build_group("(1 2 3 4)", B)
    T = sign_twist_tensor(A, B)
    P = product_action(GA, GB, T)
    assert len(P) == 16
    assert P.contains_group(P)

import pytest

from skewinv.chains import (LEMMA41_GROUP, coprime_chain, klein_chain, pair_swap_chain, sklyanin_squares_chain,
                            squares_chain, swap_sets, vandermonde_chain, weighted_klein_chain)
from skewinv.config import parse_session
from skewinv.derivation import DerivationError, run_derivation


def ok(script, **kw):
    rep = run_derivation(script, **kw)
    assert rep.ok, rep.to_text()
    return rep


@pytest.mark.parametrize("i,j", [(1, 2), (1, 3), (2, 3)])
def test_squares_chain_v3(i, j):
    ok(squares_chain(3, i, j), oracle=True)


def test_squares_chain_v4_identities():
    rep = ok(squares_chain(4, 1, 2))
    assert rep.certified("h")


@pytest.mark.parametrize("i,j", [(1, 2), (2, 3)])
def test_squares_chain_sklyanin(i, j):
    ok(squares_chain(3, i, j, sklyanin=True), oracle=True)


def test_squares_chain_rejects_bad_indices():
    with pytest.raises(DerivationError):
        squares_chain(3, 2, 1)
    with pytest.raises(DerivationError):
        squares_chain(4, 1, 2, sklyanin=True)


def test_klein_chain():
    rep = ok(klein_chain(), oracle=True)
    assert str(rep.value("y4")) == "(x4^4)#e"


@pytest.mark.parametrize("n", [1, 2])
def test_pair_swap_chain(n):
    ok(pair_swap_chain(n), oracle=True)


def test_lemma41_group_chains():
    sess, _ = parse_session(f"algebra: V n=3\nbound: 8\ngroup: {LEMMA41_GROUP}\n")
    sets = swap_sets(sess.group)
    assert [str(x) for x in sets["St"]] == ["1"]
    assert [str(x) for x in sets["Sd"]] == ["-1"]
    assert sets["Sd2"] == []
    v = ok(vandermonde_chain(sess.group, LEMMA41_GROUP))
    assert v.certified("V")
    mu = ok(coprime_chain(sess.group, LEMMA41_GROUP))
    assert mu.certified("mu")


def test_sklyanin_and_weighted_chains():
    ok(sklyanin_squares_chain())
    ok(weighted_klein_chain())

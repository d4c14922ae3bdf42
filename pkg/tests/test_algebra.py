from math import comb

from hypothesis import given, strategies as st
import pytest

from skewinv.algebra import (AlgebraError, preset, sign_twist_tensor, sklyanin_basis_change, sklyanin_generic,
                             sklyanin_xyz, sklyanin_xyz_params, sklyanin_xyz_squares_quotient, skew_polynomial,
                             vn_dimension)
from skewinv.scalar import CyclotomicField, mpq


@given(st.integers(1, 4), st.integers(0, 5))
def test_vn_hilbert_function(n, d):
    assert preset("V", 5, n=n).hilbert_function(d) == comb(n + d - 1, d) == vn_dimension(n, d)


def test_squares_are_central_in_vn():
    A = preset("V", 6, n=3)
    for i in range(3):
        assert A.is_central(A.gen(i) * A.gen(i))
    assert not A.is_central(A.gen(0) * A.gen(1))


def test_sklyanin_hilbert_series_is_polynomial_ring_size():
    for a, b, c in ((1, 1, -1), (1, 2, 3)):
        assert preset("sklyanin", 6, a=a, b=b, c=c).hilbert_series(6) == [comb(d + 2, 2) for d in range(7)]


def test_sklyanin_111_squares_central():
    A = preset("sklyanin", 6, a=1, b=1, c=-1)
    for i in range(3):
        assert A.is_central(A.gen(i) * A.gen(i))


def test_down_up_hilbert_series():
    # A(alpha, beta) has Hilbert series 1/((1-t)^2 (1-t^2))
    A = preset("downup", 6, alpha=-2, beta=-1)
    assert A.hilbert_series(6) == [1, 2, 4, 6, 9, 12, 16]
    # x*y + y*x anticommutes with the generators here rather than commuting
    z = A.free.parse("x*y + y*x")
    x = A.gen(0)
    assert not A.is_central(z)
    assert A.nf(x * z + z * x) == A.free.zero()


def test_presets_reject_bad_parameters():
    with pytest.raises(AlgebraError):
        preset("downup", 4, alpha=1, beta=0)
    with pytest.raises(AlgebraError, match="unknown preset"):
        preset("nope", 4)


def test_sign_twist_tensor_is_v_n_plus_m():
    A = skew_polynomial(2, 4, names=("y1", "y2"))
    B = skew_polynomial(3, 4, names=("z1", "z2", "z3"))
    T = sign_twist_tensor(A, B)
    assert T.ngens == 5 and T.tag == "twisted-tensor"
    assert [T.hilbert_function(d) for d in range(5)] == [vn_dimension(5, d) for d in range(5)]
    assert T.witness["z1"] == "z1"


def test_sign_twist_needs_skew_polynomial_rings():
    with pytest.raises(AlgebraError):
        sign_twist_tensor(preset("sklyanin", 3, a=1, b=1, c=-1), skew_polynomial(2, 3))


F3 = CyclotomicField(3)


@pytest.mark.parametrize("abc", [(1, 2, 3), (2, -1, 5), (1, 1, -1), (mpq(1, 2), 3, -4)])
def test_sklyanin_basis_change_factor_three(abc):
    assert all(not v for v in sklyanin_basis_change(*abc, F3, 3).values())
    assert any(v for v in sklyanin_basis_change(*abc, F3, mpq(1, 3)).values())


def test_xyz_parameters_and_genericity():
    z = F3.root()
    al, be, ga = sklyanin_xyz_params(F3(1), F3(2), F3(3), F3)
    assert (al, be, ga) == (3 + z + 2 * z * z, 3 + z * z + 2 * z, F3(6))
    assert sklyanin_generic(al, be, ga)
    assert not sklyanin_generic(F3(1), F3(1), F3(1))


def test_xyz_algebra_and_squares_quotient():
    A = sklyanin_xyz(1, 2, 3, 5, F3)
    assert A.names == ("X", "Y", "Z")
    assert A.hilbert_series(4) == [1, 3, 6, 10, 15]
    Q = sklyanin_xyz_squares_quotient(1, 2, 3, 6, F3)
    assert Q.hilbert_series(5) == [1, 3, 4, 2, 0, 0]

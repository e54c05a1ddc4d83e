from fractions import Fraction

import numpy as np
import pytest

from hochfrob import Field, Matrix, kernel_basis, matrix_rank
from hochfrob.errors import SpecParseError
from hochfrob.linalg import (integer_kernel_exact, integer_rank_certified,
                             modp_kernel, modp_rank)

Q = Field.rationals()
F5 = Field.prime(5)


def test_rational_arithmetic():
    assert Q.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert Q.mul(Fraction(2, 3), 3) == 2
    assert Q.inv(Fraction(2, 3)) == Fraction(3, 2)


def test_prime_field_arithmetic():
    assert F5.inv(2) == 3
    assert F5.add(3, 4) == 2
    assert F5.neg(2) == 3


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        F5.inv(0)
    with pytest.raises(ZeroDivisionError):
        Q.inv(0)


def test_field_parsing():
    assert Field.parse("Q").is_rationals
    assert Field.parse("F:7").p == 7
    assert Field.parse("F2").p == 2
    with pytest.raises(SpecParseError):
        Field.parse("F:4")
    with pytest.raises(SpecParseError):
        Field.parse("R")


def test_scalar_serialization():
    assert Q.format_scalar(Fraction(-5, 6)) == "-5/6"
    assert Q.format_scalar(3) == "3"
    assert Q.parse_scalar("-5/6") == Fraction(-5, 6)
    assert F5.parse_scalar("3") == 3
    with pytest.raises(SpecParseError):
        F5.parse_scalar("7")


def test_rank_fixtures():
    assert matrix_rank(Matrix.from_rows([[1, 0], [0, 1]], Q)) == 2
    assert matrix_rank(Matrix.zeros(2, 2, Q)) == 0
    m = Matrix.from_rows([[1, 2], [2, 4]], Q)
    assert matrix_rank(m) == 1
    assert kernel_basis(m) == [[-2, 1]]


def test_kernel_of_zero_and_identity():
    assert kernel_basis(Matrix.from_rows([[1, 0], [0, 1]], F5)) == []
    assert len(kernel_basis(Matrix.zeros(3, 3, F5))) == 3


@pytest.mark.parametrize("seed", range(8))
def test_rank_nullity_and_transpose(seed):
    rng = np.random.default_rng(seed)
    a = rng.integers(-4, 5, size=(6, 5))
    for fld in (Q, Field.prime(3)):
        m = Matrix.from_rows((a if fld.is_rationals else a % 3).tolist(), fld)
        r = matrix_rank(m)
        kb = kernel_basis(m)
        assert r + len(kb) == m.cols
        assert matrix_rank(m.transpose()) == r
        for v in kb:
            assert all(fld.is_zero(x) for x in m.mul_vector(v))


@pytest.mark.parametrize("seed", range(8))
def test_fast_paths_agree_with_pure(seed):
    rng = np.random.default_rng(100 + seed)
    a = rng.integers(-3, 4, size=(7, 6))
    assert integer_rank_certified(a) == matrix_rank(Matrix.from_rows(a.tolist(), Q))
    assert modp_rank(a % 3, 3) == matrix_rank(Matrix.from_rows((a % 3).tolist(), Field.prime(3)))
    kern = integer_kernel_exact(a)
    assert len(kern) == 6 - integer_rank_certified(a)
    for v in kern:
        assert not np.any(a @ np.array(v))
    basis, _ = modp_kernel(a % 3, 3)
    for row in basis:
        assert not np.any((a @ row) % 3)


def test_rational_kernel_with_fractions():
    m = Matrix.from_rows([[Fraction(1, 2), 1, 0], [0, 2, Fraction(2, 3)]], Q)
    kb = kernel_basis(m)
    assert len(kb) == 1
    assert all(x == 0 for x in m.mul_vector(kb[0]))


def test_large_modular_elimination_exactness():
    # The witness-prime path must match a small hand case.
    a = np.array([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert integer_rank_certified(a) == 2
    assert modp_rank(a % 2, 2) == 2

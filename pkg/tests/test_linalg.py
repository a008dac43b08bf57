"""Exact linear algebra: echelon forms, kernels, subspaces, scalars."""
import random
from fractions import Fraction

import pytest

from embtens import (
    Matrix,
    NotASubspace,
    ParseError,
    Subspace,
    kernel_basis,
    parse_scalar,
    quotient_dim,
    rank,
    rref,
    scalar_to_json,
)
from conftest import rand_matrix
from oracles import bareiss_rank


def test_rref_identity():
    m = Matrix.identity(2)
    red, pivots = rref(m)
    assert red == m
    assert pivots == (0, 1)


def test_rref_rank_one():
    red, pivots = rref(Matrix.from_rows([[2, 4], [1, 2]]))
    assert red.to_rows() == [[1, 2], [0, 0]]
    assert pivots == (0,)


def test_rref_random_rank_matches_fraction_free_oracle():
    rng = random.Random(13)
    for _ in range(30):
        m = rand_matrix(rng, 5, 7)
        assert rank(m) == bareiss_rank(m.to_rows())


def test_rref_idempotent():
    rng = random.Random(14)
    for _ in range(20):
        m = rand_matrix(rng, 4, 6)
        red, _ = rref(m)
        again, _ = rref(red)
        assert again == red


def test_rank_nullity():
    rng = random.Random(15)
    for _ in range(20):
        m = rand_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        assert rank(m) + kernel_basis(m).dim == m.cols


def test_kernel_identity_and_zero():
    assert kernel_basis(Matrix.identity(3)).dim == 0
    assert kernel_basis(Matrix.zero(3, 3)).dim == 3


def test_kernel_of_rank_one_matrix():
    m = Matrix.from_rows([[2, 4], [1, 2]])
    ker = kernel_basis(m)
    assert ker.dim == 1
    assert ker.contains((Fraction(-2), Fraction(1)))
    for v in ker.basis:
        assert all(x == 0 for x in m.apply(v))


def test_kernel_vectors_annihilated():
    rng = random.Random(16)
    for _ in range(15):
        m = rand_matrix(rng, 3, 5)
        for v in kernel_basis(m).basis:
            assert all(x == 0 for x in m.apply(v))


def test_subspace_canonical_equality():
    a = Subspace.from_spanning(3, [(1, 1, 0), (0, 1, 1)])
    b = Subspace.from_spanning(3, [(1, 2, 1), (2, 3, 1), (1, 1, 0)])
    assert a == b
    assert a.pivots == (0, 1)


def test_subspace_membership_and_coordinates():
    s = Subspace.from_spanning(3, [(1, 0, 2), (0, 1, -1)])
    v = (Fraction(2), Fraction(3), Fraction(1))
    assert s.contains(v)
    coords = s.coordinates(v)
    assert coords == (Fraction(2), Fraction(3))
    assert not s.contains((1, 0, 0))
    assert s.coordinates((1, 0, 0)) is None


def test_quotient_dim():
    full = Subspace.full(3)
    line = Subspace.from_spanning(3, [(1, 2, 3)])
    assert quotient_dim(full, full) == 0
    assert quotient_dim(full, Subspace.zero(3)) == 3
    assert quotient_dim(full, line) == 2
    with pytest.raises(NotASubspace):
        quotient_dim(line, full)


def test_matrix_inverse():
    m = Matrix.from_rows([[1, 2], [3, 5]])
    inv = m.try_inverse()
    assert inv is not None
    assert inv @ m == Matrix.identity(2)
    assert Matrix.from_rows([[1, 2], [2, 4]]).try_inverse() is None


def test_scalar_json_round_trip():
    assert parse_scalar("4/3") == Fraction(4, 3)
    assert parse_scalar(2) == Fraction(2)
    assert parse_scalar("-2/3") == Fraction(-2, 3)
    assert scalar_to_json(Fraction(4, 3)) == "4/3"
    assert scalar_to_json(Fraction(-6, 3)) == -2
    for x in (Fraction(0), Fraction(7, 5), Fraction(-9, 4), Fraction(12)):
        assert parse_scalar(scalar_to_json(x)) == x


def test_scalar_rejects_floats_and_junk():
    with pytest.raises(ParseError):
        parse_scalar("0.5")
    with pytest.raises(ParseError):
        parse_scalar(True)
    with pytest.raises(ParseError):
        parse_scalar("1/0")


def test_exactness_of_products():
    rng = random.Random(17)
    for _ in range(50):
        x = Fraction(rng.randint(1, 60), rng.randint(1, 60))
        assert x * (1 / x) == 1

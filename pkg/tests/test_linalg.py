from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclic_metric.linalg import (
    Matrix,
    NotSymmetricError,
    block_diag,
    congruence_diagonalize,
    format_rational,
    inverse,
    nullspace,
    rank,
    rref,
    signature,
    solve,
)

from strategies import invertible, matrices, rationals, square, symmetric_matrices


def M(rows):
    return Matrix.from_rows(rows)


def test_rref_identity():
    red, r, piv = rref(Matrix.identity(2))
    assert red == Matrix.identity(2) and r == 2 and piv == [0, 1]


def test_rref_zero():
    red, r, piv = rref(Matrix.zeros(3, 3))
    assert red.is_zero() and r == 0 and piv == []


def test_rref_dependent_rows():
    red, r, piv = rref(M([[1, 2], [2, 4]]))
    assert r == 1 and piv == [0]
    assert red == M([[1, 2], [0, 0]])


def test_nullspace_examples():
    assert nullspace(Matrix.identity(4)).rows == 0
    assert rank(nullspace(Matrix.zeros(2, 3))) == 3
    ns = nullspace(M([[1, 1, 0]]))
    assert ns.rows == 2
    span = ns.tolist()
    assert rank(Matrix.from_rows(span + [[1, -1, 0]])) == 2
    assert rank(Matrix.from_rows(span + [[0, 0, 1]])) == 2


def test_signature_examples():
    assert signature(Matrix.identity(3)) == (3, 0, 0)
    assert signature(M([[0, 1], [1, 0]])) == (1, 1, 0)
    lorentz = M([[0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1]])
    assert signature(lorentz) == (3, 1, 0)
    assert signature(Matrix.zeros(2, 2)) == (0, 0, 2)


def test_signature_rejects_asymmetric():
    with pytest.raises(NotSymmetricError):
        signature(M([[0, 1], [0, 0]]))


def test_exactness():
    third = Fraction(1, 3)
    m = M([[third, third, third]])
    assert sum(m.row(0)) == 1
    assert format_rational(Fraction(-6, 4)) == "-3/2"
    assert format_rational(Fraction(4, 2)) == "2"


def test_solve_and_inverse():
    m = M([[2, 1], [1, 1]])
    assert inverse(m) == M([[1, -1], [-1, 2]])
    assert solve(m, [3, 2]) == (1, 1)
    assert solve(M([[1, 1], [1, 1]]), [1, 2]) is None
    with pytest.raises(ZeroDivisionError):
        inverse(M([[1, 2], [2, 4]]))


def test_kron_and_block():
    a = M([[1, 2], [3, 4]])
    k = a.kron(Matrix.identity(2))
    assert k.shape == (4, 4) and k[2, 0] == 3 and k[3, 1] == 3 and k[2, 1] == 0
    assert block_diag(a, Matrix.identity(1)).shape == (3, 3)


@given(matrices())
def test_nullspace_is_exact_kernel(m):
    ns = nullspace(m)
    assert ns.rows + rank(m) == m.cols
    for v in ns.data:
        assert not any(m.apply(v))
    if ns.rows:
        assert rank(ns) == ns.rows


@given(matrices())
def test_rank_of_transpose(m):
    assert rank(m) == rank(m.T)


@given(matrices())
def test_rref_is_idempotent(m):
    red, r, piv = rref(m)
    again, r2, piv2 = rref(red)
    assert again == red and r == r2 and piv == piv2
    for k, p in enumerate(piv):
        assert red[k, p] == 1
        assert all(red[i, p] == 0 for i in range(red.rows) if i != k)


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(symmetric_matrices(st.just(n)), invertible(n))))
def test_signature_congruence_invariant(pair):
    b, s = pair
    assert signature(b) == signature(s.T @ b @ s)


@given(symmetric_matrices())
def test_signature_counts(b):
    p, n, z = signature(b)
    assert p + n + z == b.rows
    assert p + n == rank(b)
    d = congruence_diagonalize(b)
    assert sum(1 for x in d if x > 0) == p


@given(st.integers(1, 4).flatmap(invertible))
def test_inverse_roundtrip(m):
    assert m @ inverse(m) == Matrix.identity(m.rows)


@given(square(), rationals)
def test_trace_linear(m, c):
    assert m.scale(c).trace() == c * m.trace()

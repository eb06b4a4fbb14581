from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bihomsuper.errors import ParseError, Singular
from bihomsuper.exact import (Matrix, Q, format_rational, invert, kernel_basis,
                              parse_rational, rank, solve)

small = st.fractions(min_value=-3, max_value=3, max_denominator=3)


def matrices(rows=st.integers(0, 4), cols=st.integers(0, 4)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(small, min_size=rc[0] * rc[1], max_size=rc[0] * rc[1])
        .map(lambda e: Matrix(rc[0], rc[1], e)))


def test_rank_examples():
    assert rank(Matrix(0, 0)) == 0
    assert rank(Matrix.identity(2)) == 2
    assert rank(Matrix.from_rows([[1, 2], [2, 4]])) == 1


def test_kernel_examples():
    assert kernel_basis(Matrix.identity(2)) == []
    assert len(kernel_basis(Matrix.zero(1, 2))) == 2
    (v,) = kernel_basis(Matrix.from_rows([[1, 2], [2, 4]]))
    # proportional to (-2, 1)
    assert v[0] == -2 * v[1] and v[1] != 0


def test_invert_examples():
    assert invert(Matrix.identity(3)) == Matrix.identity(3)
    assert invert(Matrix.diagonal([2, 3])) == Matrix.diagonal([Fraction(1, 2), Fraction(1, 3)])
    assert invert(Matrix.from_rows([[1, 1], [0, 1]])) == Matrix.from_rows([[1, -1], [0, 1]])


def test_singular():
    with pytest.raises(Singular):
        invert(Matrix.from_rows([[1, 2], [2, 4]]))


@given(matrices())
def test_rank_nullity(m):
    ker = kernel_basis(m)
    assert rank(m) + len(ker) == m.cols
    for v in ker:
        assert not any(m.apply(v))


@given(st.integers(1, 3).flatmap(lambda n: st.lists(small, min_size=n * n, max_size=n * n)
                                 .map(lambda e: Matrix(n, n, e))))
def test_inverse_both_sides(m):
    try:
        mi = invert(m)
    except Singular:
        assert rank(m) < m.rows
        return
    assert m @ mi == Matrix.identity(m.rows) == mi @ m


@settings(max_examples=50)
@given(st.integers(1, 3), st.integers(1, 3), st.integers(1, 3), st.integers(1, 3), st.data())
def test_product_associative(a, b, c, d, data):
    def mat(r, k):
        return Matrix(r, k, data.draw(st.lists(small, min_size=r * k, max_size=r * k)))
    A, B, C = mat(a, b), mat(b, c), mat(c, d)
    assert (A @ B) @ C == A @ (B @ C)


def test_solve():
    m = Matrix.from_rows([[1, 1], [0, 2]])
    assert solve(m, [3, 4]) == (1, 2)
    assert solve(Matrix.from_rows([[1, 1], [1, 1]]), [1, 2]) is None


@given(small)
def test_rational_round_trip(x):
    assert parse_rational(format_rational(x)) == x


@pytest.mark.parametrize("bad", ["2/4", "3/1", "+1", "1.5", "1/-2", "", "a"])
def test_rational_rejects_noncanonical(bad):
    with pytest.raises(ParseError):
        parse_rational(bad)


def test_Q():
    assert Q("-3/4") == Fraction(-3, 4)
    assert Q(2) == 2
    with pytest.raises(TypeError):
        Q(0.5)

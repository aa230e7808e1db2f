from __future__ import annotations

from fractions import Fraction

import sympy
from hypothesis import given
from hypothesis import strategies as st

from barbellkit.linalg import bareiss_rank, integer_rows, nullspace, rank, rref

small = st.integers(-4, 4)


@st.composite
def matrices(draw, max_rows=6, max_cols=6):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return [[Fraction(draw(small), draw(st.integers(1, 3))) for _ in range(c)] for _ in range(r)]


def test_examples():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank([[0, 1], [1, 0]]) == 2
    assert bareiss_rank([[0, 0, 3], [0, 2, 1]]) == 2


def test_integer_rows_clears_denominators():
    assert integer_rows([[Fraction(1, 2), Fraction(1, 3)]]) == [[3, 2]]


def test_rref_pivots():
    R, piv = rref([[0, 2, 4], [1, 1, 1]], 3)
    assert piv == [0, 1]
    assert R[1] == [0, 1, 2]


@given(matrices())
def test_rank_matches_sympy(M):
    assert rank(M) == sympy.Matrix(M).rank()


@given(matrices())
def test_nullspace_is_kernel(M):
    ncols = len(M[0])
    basis = nullspace(M, ncols)
    assert len(basis) == ncols - rank(M)
    for v in basis:
        assert any(v)
        for row in M:
            assert sum(a * b for a, b in zip(row, v)) == 0
    if basis:
        assert sympy.Matrix(basis).rank() == len(basis)

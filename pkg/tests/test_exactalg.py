import random
from fractions import Fraction

import pytest

from pmscheme.errors import FitInconsistent, FitUnderdetermined
from pmscheme.exactalg import (
    charpoly,
    distinct_integer_roots,
    kernel_basis,
    poly_eval,
    solve_unique,
    squarefree_part,
)

F = Fraction


def test_charpoly_known():
    assert charpoly([[1, 1], [2, 0]]) == [-2, -1, 1]  # (x-2)(x+1)
    assert charpoly([[3]]) == [-3, 1]
    assert charpoly([[0, 0], [0, 0]]) == [0, 0, 1]


def test_charpoly_matches_root_products():
    rng = random.Random(1)
    for _ in range(20):
        d = rng.randint(2, 5)
        roots = [rng.randint(-6, 6) for _ in range(d)]
        # companion-free: build a triangular matrix with the chosen diagonal
        mat = [[roots[i] if i == j else (rng.randint(-3, 3) if j > i else 0) for j in range(d)] for i in range(d)]
        poly = charpoly(mat)
        for r in roots:
            assert poly_eval(poly, r) == 0


def test_squarefree_and_roots():
    # (x-1)^2 (x+3) = x^3 + x^2 - 5x + 3
    poly = [3, -5, 1, 1]
    assert squarefree_part(poly) == [-3, 2, 1]  # (x-1)(x+3)
    assert distinct_integer_roots(poly, 10) is None  # repeated root rejected
    # (x-2)(x+1)x = x^3 - x^2 - 2x
    assert distinct_integer_roots([0, -2, -1, 1], 5) == [-1, 0, 2]
    assert distinct_integer_roots([-2, -1, 1], 5) == [-1, 2]
    # irreducible over the integers
    assert distinct_integer_roots([1, 0, 1], 5) is None


def test_solve_unique_and_errors():
    a = [[F(1), F(2)], [F(3), F(4)]]
    assert solve_unique(a, [F(5), F(11)]) == [F(1), F(2)]
    with pytest.raises(FitUnderdetermined):
        solve_unique([[F(1), F(1)]], [F(2)])
    with pytest.raises(FitInconsistent):
        solve_unique([[F(1), F(1)], [F(2), F(2)]], [F(1), F(3)])


def test_kernel_basis():
    a = [[F(1), F(2), F(3)], [F(2), F(4), F(6)]]
    basis = kernel_basis(a)
    assert len(basis) == 2
    for v in basis:
        assert all(sum(r * x for r, x in zip(row, v)) == 0 for row in a)

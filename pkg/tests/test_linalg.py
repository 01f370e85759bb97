import random
from fractions import Fraction

import pytest

from higgsrel.linalg import SliceBasis, nullspace, rref, slice_span, solve_columns
from higgsrel.poly import GradedPoly, abg_table, degree_slice_monomials, poly_parse

ABG = abg_table()


def test_span_dimension():
    a2 = poly_parse("a^2", ABG)
    a2b = poly_parse("a^2 + b", ABG)
    basis = slice_span([a2, a2b], ABG, 4)
    assert basis.dim == 2


def test_member():
    basis = slice_span([poly_parse("a^2", ABG)], ABG, 4)
    assert not basis.member(poly_parse("b", ABG))
    assert basis.member(poly_parse("3*a^2", ABG))


def test_kernel_of_zero_functional():
    monos = degree_slice_monomials(ABG, 2)
    zero_row = [Fraction(0)] * len(monos)
    basis = SliceBasis.from_kernel(ABG, 2, [zero_row])
    assert basis.dim == 1


def test_respan_is_idempotent():
    polys = [poly_parse("a^3 + g3", ABG), poly_parse("a*b - 2*g3", ABG)]
    basis = slice_span(polys, ABG, 6)
    again = slice_span(basis.basis_polys(), ABG, 6)
    assert basis == again
    assert basis.rows == again.rows


def test_span_rejects_inhomogeneous():
    with pytest.raises(ValueError):
        slice_span([poly_parse("a + b", ABG)], ABG, 2)


def test_rref_is_canonical_under_row_order():
    rng = random.Random(3)
    rows = [[Fraction(rng.randrange(-5, 6)) for _ in range(5)] for _ in range(4)]
    p1 = rref(rows, 5)
    rows2 = list(reversed(rows))
    p2 = rref(rows2, 5)
    assert p1 == p2


def test_nullspace_annihilates():
    rng = random.Random(17)
    for _ in range(10):
        ncols = rng.randrange(3, 7)
        rows = [
            [Fraction(rng.randrange(-4, 5)) for _ in range(ncols)]
            for _ in range(rng.randrange(1, 5))
        ]
        basis = nullspace(rows, ncols)
        _, reduced = rref(rows, ncols)
        rank = len(reduced)
        assert len(basis) == ncols - rank
        for vec in basis:
            for row in rows:
                assert sum(r * v for r, v in zip(row, vec)) == 0


def test_solve_columns():
    cols = [
        [Fraction(1), Fraction(0), Fraction(2)],
        [Fraction(0), Fraction(1), Fraction(1)],
    ]
    target = [Fraction(2), Fraction(3), Fraction(7)]
    x = solve_columns(cols, target)
    assert x == [Fraction(2), Fraction(3)]
    assert solve_columns(cols, [Fraction(0), Fraction(0), Fraction(1)]) is None


def test_subspace_equality_is_matrix_equality():
    b1 = slice_span([poly_parse("a^2 + b", ABG), poly_parse("b", ABG)], ABG, 4)
    b2 = slice_span([poly_parse("a^2", ABG), poly_parse("a^2 + 2*b", ABG)], ABG, 4)
    assert b1 == b2
    b3 = slice_span([poly_parse("a^2", ABG)], ABG, 4)
    assert b1 != b3
    assert b1.contains(b3)
    assert not b3.contains(b1)

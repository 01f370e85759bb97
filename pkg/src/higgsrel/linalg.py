"""Degreewise exact linear algebra over the rationals.

Row reduction is done fraction-free on integer rows (cross-multiplied,
content-reduced) and normalized to the unique reduced row echelon form
at the end, so bases are canonical: two subspaces are equal iff their
`SliceBasis` matrices are equal.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .poly import GradedPoly, VarTable, degree_slice_monomials

_ZERO = Fraction(0)


def _to_int_row(row: Sequence[Fraction | int]) -> list[int]:
    denom = 1
    for x in row:
        if isinstance(x, Fraction):
            denom = denom * x.denominator // gcd(denom, x.denominator)
    out = [int(x * denom) if isinstance(x, Fraction) else int(x) * denom for x in row]
    g = 0
    for x in out:
        g = gcd(g, x)
    if g > 1:
        out = [x // g for x in out]
    return out


class Echelon:
    """Incremental integer row echelon; rows indexed by pivot column."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, list[int]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row: Sequence[Fraction | int]) -> list[int]:
        """Reduce a row against the current echelon (result up to scale)."""
        r = _to_int_row(row)
        for c in range(self.ncols):
            if not r[c]:
                continue
            piv = self.rows.get(c)
            if piv is None:
                break
            pv, rv = piv[c], r[c]
            g = gcd(pv, rv)
            m1, m2 = pv // g, rv // g
            r = [a * m1 - b * m2 for a, b in zip(r, piv)]
        g = 0
        for x in r:
            g = gcd(g, x)
        if g > 1:
            r = [x // g for x in r]
        return r

    def add(self, row: Sequence[Fraction | int]) -> bool:
        """Insert a row; True iff it enlarged the span."""
        r = self.reduce(row)
        for c in range(self.ncols):
            if r[c]:
                if r[c] < 0:
                    r = [-x for x in r]
                self.rows[c] = r
                return True
        return False

    def rref(self) -> tuple[tuple[int, ...], tuple[tuple[Fraction, ...], ...]]:
        """Finish to the canonical reduced form: (pivot columns, rows)."""
        pivots = sorted(self.rows)
        reduced: dict[int, list[Fraction]] = {
            c: [Fraction(x, self.rows[c][c]) for x in self.rows[c]] for c in pivots
        }
        for idx in range(len(pivots) - 1, -1, -1):
            c = pivots[idx]
            row = reduced[c]
            for c2 in pivots[idx + 1 :]:
                f = row[c2]
                if f:
                    other = reduced[c2]
                    reduced[c] = [a - f * b for a, b in zip(row, other)]
                    row = reduced[c]
        return tuple(pivots), tuple(tuple(reduced[c]) for c in pivots)


def rref(rows: Iterable[Sequence[Fraction | int]], ncols: int):
    ech = Echelon(ncols)
    for row in rows:
        ech.add(row)
    return ech.rref()


def nullspace(
    rows: Iterable[Sequence[Fraction | int]], ncols: int
) -> tuple[tuple[Fraction, ...], ...]:
    """Canonical basis of {x : A x = 0} for the matrix with the given rows."""
    pivots, reduced = rref(rows, ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [_ZERO] * ncols
        vec[f] = Fraction(1)
        for c, row in zip(pivots, reduced):
            if row[f]:
                vec[c] = -row[f]
        basis.append(vec)
    _, canon = rref(basis, ncols)
    return canon


def solve_columns(
    columns: Sequence[Sequence[Fraction]], target: Sequence[Fraction]
) -> list[Fraction] | None:
    """One exact solution x of sum_i x_i * columns[i] = target, or None."""
    n = len(target)
    k = len(columns)
    rows = []
    for j in range(n):
        rows.append([columns[i][j] for i in range(k)] + [target[j]])
    pivots, reduced = rref(rows, k + 1)
    if k in pivots:
        return None
    x = [_ZERO] * k
    for c, row in zip(pivots, reduced):
        x[c] = row[k]
    return x


class SliceBasis:
    """Row-reduced exact basis of a subspace of one degree slice.

    The monomial list is the deterministic slice enumeration and the
    matrix is the unique RREF, so `==` decides subspace equality.
    """

    __slots__ = ("table", "degree", "monomials", "pivots", "rows")

    def __init__(
        self,
        table: VarTable,
        degree: int,
        monomials: tuple[tuple[int, ...], ...],
        pivots: tuple[int, ...],
        rows: tuple[tuple[Fraction, ...], ...],
    ):
        self.table = table
        self.degree = degree
        self.monomials = monomials
        self.pivots = pivots
        self.rows = rows

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SliceBasis)
            and self.table == other.table
            and self.degree == other.degree
            and self.monomials == other.monomials
            and self.rows == other.rows
        )

    @classmethod
    def span(
        cls, polys: Iterable[GradedPoly], table: VarTable, degree: int
    ) -> "SliceBasis":
        monos = tuple(degree_slice_monomials(table, degree))
        index = {m: i for i, m in enumerate(monos)}
        ech = Echelon(len(monos))
        for p in polys:
            if p.table != table:
                raise ValueError("variable table mismatch")
            if not p:
                continue
            if not p.is_homogeneous() or p.ordinary_degree() != degree:
                raise ValueError("span input not homogeneous of the slice degree")
            vec = [_ZERO] * len(monos)
            for e, c in p.terms.items():
                vec[index[e]] = c
            ech.add(vec)
        pivots, rows = ech.rref()
        return cls(table, degree, monos, pivots, rows)

    @classmethod
    def from_kernel(
        cls,
        table: VarTable,
        degree: int,
        functionals: Iterable[Sequence[Fraction | int]],
    ) -> "SliceBasis":
        """All slice elements annihilated by the given linear functionals
        (rows over the slice monomial basis)."""
        monos = tuple(degree_slice_monomials(table, degree))
        vecs = nullspace(functionals, len(monos))
        ech = Echelon(len(monos))
        for v in vecs:
            ech.add(v)
        pivots, rows = ech.rref()
        return cls(table, degree, monos, pivots, rows)

    def vectorize(self, p: GradedPoly) -> list[Fraction]:
        if p.table != self.table:
            raise ValueError("variable table mismatch")
        if p and (not p.is_homogeneous() or p.ordinary_degree() != self.degree):
            raise ValueError("polynomial not homogeneous of the slice degree")
        index = {m: i for i, m in enumerate(self.monomials)}
        vec = [_ZERO] * len(self.monomials)
        for e, c in p.terms.items():
            vec[index[e]] = c
        return vec

    def reduce_vector(self, vec: Sequence[Fraction]) -> list[Fraction]:
        out = list(vec)
        for c, row in zip(self.pivots, self.rows):
            f = out[c]
            if f:
                out = [a - f * b for a, b in zip(out, row)]
        return out

    def member_vector(self, vec: Sequence[Fraction]) -> bool:
        return not any(self.reduce_vector(vec))

    def member(self, p: GradedPoly) -> bool:
        return self.member_vector(self.vectorize(p))

    def contains(self, other: "SliceBasis") -> bool:
        if self.monomials != other.monomials:
            raise ValueError("slice mismatch")
        return all(self.member_vector(row) for row in other.rows)

    def basis_polys(self) -> list[GradedPoly]:
        out = []
        for row in self.rows:
            out.append(
                GradedPoly(
                    self.table,
                    {m: c for m, c in zip(self.monomials, row) if c},
                )
            )
        return out

    def __repr__(self) -> str:
        return (
            f"SliceBasis(degree={self.degree}, dim={self.dim},"
            f" slice={len(self.monomials)})"
        )


def slice_span(polys: Iterable[GradedPoly], table: VarTable, degree: int) -> SliceBasis:
    return SliceBasis.span(polys, table, degree)

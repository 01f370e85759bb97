"""Intersection numbers on symmetric products of a genus-g curve.

The invariant engine works in Q[eta, th]: a monomial eta^a th^b pairs
against the fundamental class of the m-th symmetric product to
b! C(g, b) when a + b = m, else 0.  The full engine works in the raw
odd generators xi_j: a monomial eta^q xi_{j1}...xi_{jd} (increasing
order) evaluates to (-1)^{b(b-1)/2} when its xi part consists of b
matched pairs (j, j+g) and q + b = m, else 0 -- the sign is the Koszul
cost of regrouping into th_j = xi_j xi_{j+g} pairs, which are the +1
reference orientation.  Both engines agree after expanding th.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .families import binom
from .poly import GradedPoly, VarTable, eta_theta_table, eta_xi_table
from .series import TruncatedSeries

_ETH = eta_theta_table()


@dataclass(frozen=True)
class SymProdSpace:
    """The m-th symmetric product of a genus-g curve (g = 0 degenerates
    to the eta-only ring; used when peeling off matched pairs)."""

    m: int
    g: int

    def __post_init__(self):
        if self.m < 0 or self.g < 0:
            raise ValueError("m and g must be non-negative")


def _pairing(space: SymProdSpace, a: int, b: int) -> Fraction:
    """<eta^a th^b> on the fundamental class."""
    if a < 0 or b < 0 or a + b != space.m:
        return Fraction(0)
    return Fraction(factorial(b) * binom(space.g, b))


def evaluate_invariant(space: SymProdSpace, p: GradedPoly) -> Fraction:
    """Evaluate a polynomial in eta, th on the fundamental class."""
    total = Fraction(0)
    i_eta = p.table.index("eta")
    i_th = p.table.index("th")
    for e, c in p.terms.items():
        for j, exp in enumerate(e):
            if exp and j not in (i_eta, i_th):
                raise ValueError("evaluate_invariant expects a polynomial in eta, th")
        total += c * _pairing(space, e[i_eta], e[i_th])
    return total


def evaluate_full(space: SymProdSpace, p: GradedPoly) -> Fraction:
    """Evaluate a polynomial in eta and the odd xi_j generators.

    The polynomial's monomials are canonical (increasing variable order);
    a monomial with b matched pairs carries the regrouping sign
    (-1)^{b(b-1)/2} relative to the paired reference orientation.
    """
    g = space.g
    table = p.table
    i_eta = table.index("eta")
    xi_pos = [table.index(f"xi{j}") for j in range(1, 2 * g + 1)]
    total = Fraction(0)
    for e, c in p.terms.items():
        for j, exp in enumerate(e):
            if exp and j != i_eta and j not in xi_pos:
                raise ValueError("evaluate_full expects a polynomial in eta, xi_j")
        q = e[i_eta]
        flags = [e[pos] for pos in xi_pos]
        if any(flags[j] != flags[j + g] for j in range(g)):
            continue
        b = sum(flags[:g])
        if q + b != space.m:
            continue
        sign = -1 if (b * (b - 1) // 2) % 2 else 1
        total += c * sign
    return total


def residue_evaluate(
    space: SymProdSpace, A: TruncatedSeries, B: TruncatedSeries
) -> Fraction:
    """A(eta) exp(th B(eta)) on the fundamental class, computed as the
    eta^m coefficient of A(eta) (1 + eta B(eta))^g."""
    if A.nvars != 1 or B.nvars != 1:
        raise ValueError("residue_evaluate takes univariate series")
    if min(A.order, B.order) <= space.m:
        raise ValueError(
            f"truncation order must exceed m = {space.m} for an exact residue"
        )
    order = min(A.order, B.order)
    x = TruncatedSeries.var(0, 1, order)
    inner = TruncatedSeries.one(1, order) + x * B.truncate(order)
    total = A.truncate(order) * inner ** space.g
    value = total.coeff(space.m)
    return value if isinstance(value, Fraction) else Fraction(value)


def first_nonzero_pairing(
    space: SymProdSpace, q: GradedPoly
) -> tuple[int, int, Fraction] | None:
    """First (a, b, value) with <q * eta^a th^b> != 0, scanning b upward;
    None when the class pairs to zero against everything."""
    if not q:
        return None
    if not q.is_homogeneous():
        raise ValueError("pairing scan expects a homogeneous class")
    degree = q.ordinary_degree() // 2
    rem = space.m - degree
    if rem < 0:
        return None
    i_eta = q.table.index("eta")
    i_th = q.table.index("th")
    for b in range(0, min(space.g, rem) + 1):
        a = rem - b
        value = Fraction(0)
        for e, c in q.terms.items():
            value += c * _pairing(space, e[i_eta] + a, e[i_th] + b)
        if value:
            return (a, b, value)
    return None


def is_zero_class(space: SymProdSpace, q: GradedPoly) -> bool:
    """True iff the class vanishes in the invariant cohomology: its total
    degree exceeds m, or every pairing against eta^a th^b vanishes."""
    return first_nonzero_pairing(space, q) is None


class LemmaHypothesisError(ValueError):
    """Raised when a vanishing statement is queried off its hypotheses."""


def vanishing_class_51(p: int, q: int, ell: int) -> GradedPoly:
    """The part of eta^p exp(th) / (1+eta)^q in total degree ell, as a
    polynomial in eta, th."""
    terms = {}
    for b in range(0, ell - p + 1):
        a = ell - p - b
        if q == 0:
            if a != 0:
                continue
            coeff = Fraction(1, factorial(b))
        else:
            coeff = Fraction((-1) ** a * binom(q + a - 1, a), factorial(b))
        if coeff:
            terms[(p + a, b)] = terms.get((p + a, b), Fraction(0)) + coeff
    return GradedPoly(_ETH, terms)


def lemma51_check(space: SymProdSpace, p: int, q: int, ell: int) -> bool:
    """Vanishing of (eta^p exp th / (1+eta)^q)_ell under the hypotheses
    m - g + q <= ell and g + p - q < ell; hypothesis violations raise."""
    if min(p, q, ell) < 0:
        raise ValueError("indices must be non-negative")
    if not (space.m - space.g + q <= ell and space.g + p - q < ell):
        raise LemmaHypothesisError(
            f"hypotheses fail for m={space.m}, g={space.g}, p={p}, q={q}, ell={ell}"
        )
    if p > ell:
        return True
    return is_zero_class(space, vanishing_class_51(p, q, ell))


def theta_as_xi(g: int) -> GradedPoly:
    """th = sum_j xi_j xi_{j+g} in the raw odd generators."""
    table = eta_xi_table(g)
    out = GradedPoly.zero(table)
    for j in range(1, g + 1):
        out = out + GradedPoly.variable(table, f"xi{j}") * GradedPoly.variable(
            table, f"xi{j + g}"
        )
    return out


def expand_invariant(g: int, p: GradedPoly) -> GradedPoly:
    """Send a polynomial in eta, th to the raw generators (th expanded)."""
    table = eta_xi_table(g)
    images = {
        "eta": GradedPoly.variable(table, "eta"),
        "th": theta_as_xi(g),
    }
    return p.substitute(images, table)


def lemma101_check(g: int, m: int, k: int, p: GradedPoly) -> bool:
    """Equivalence test behind the genus-peeling decomposition: p(eta, th)
    is a zero class on the (g-k, m-k) symmetric product iff
    p xi_1 ... xi_k is zero on the (g, m) one, the latter probed by
    pairing against xi_{g+1} ... xi_{g+k} eta^a th^b via the full engine.
    When m - k < 0 every class counts as a relation downstairs.
    """
    if not (0 <= k <= g):
        raise ValueError("k must lie in 0..g")
    if p and not p.is_homogeneous():
        raise ValueError("p must be homogeneous")

    if m - k < 0:
        lhs = True
    else:
        small = SymProdSpace(m - k, g - k)
        lhs = is_zero_class(small, p)

    big = SymProdSpace(m, g)
    table = eta_xi_table(g)
    expanded = expand_invariant(g, p)
    for j in range(1, k + 1):
        expanded = expanded * GradedPoly.variable(table, f"xi{j}")
    rhs = True
    if expanded:
        degree2 = expanded.ordinary_degree()  # ordinary degree of p xi_1..xi_k
        probe_base = GradedPoly.one(table)
        for j in range(g + 1, g + k + 1):
            probe_base = probe_base * GradedPoly.variable(table, f"xi{j}")
        theta = theta_as_xi(g)
        rem2 = 2 * m - degree2 - k  # ordinary degree left for eta^a th^b
        if rem2 >= 0 and rem2 % 2 == 0:
            rem = rem2 // 2
            eta = GradedPoly.variable(table, "eta")
            for b in range(0, min(g, rem) + 1):
                a = rem - b
                probe = probe_base * (eta ** a) * (theta ** b)
                if evaluate_full(big, expanded * probe):
                    rhs = False
                    break
    else:
        rhs = True
    return lhs == rhs

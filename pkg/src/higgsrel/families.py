"""The named polynomial families in alpha, beta, gamma (and u).

This is where every recursively or combinatorially defined class lives:
the xi recursion and its two-index extension, the rho generators of the
relation ideal, the coefficient extraction through the even hyperbolic
kernels, and the assembled equivariant families.

Conventions (fixed throughout): binomials vanish whenever the lower
index is negative or exceeds the upper one; the xi recursion is applied
for r >= 0, which forces xi^k_1 = alpha; gamma powers above g are
dropped wherever a gamma cap is stated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .poly import GradedPoly, VarTable, abg_table, abgu_table
from . import series as _series

_ABG = abg_table()
_ABGU = abgu_table()


def binom(a: int, b: int) -> int:
    """C(a, b), zero when a < b or b < 0 (extends the C(-1,0) = 0 rule)."""
    if b < 0 or a < b:
        return 0
    return comb(a, b)


def _mono(ea: int = 0, eb: int = 0, ec: int = 0, coeff=1) -> GradedPoly:
    return GradedPoly.monomial(_ABG, (ea, eb, ec), Fraction(coeff))


@lru_cache(maxsize=None)
def _xi_free(k: int, r: int) -> GradedPoly:
    """xi^k_r in the free ring Q[a,b,g3]:
    (r+1) xi_{r+1} = a xi_r + (r-2k) b xi_{r-1} + 2 g3 xi_{r-2}."""
    if r < 0:
        return GradedPoly.zero(_ABG)
    if r == 0:
        return GradedPoly.one(_ABG)
    rr = r - 1
    acc = _mono(ea=1) * _xi_free(k, rr)
    if rr >= 1:
        acc = acc + _mono(eb=1, coeff=rr - 2 * k) * _xi_free(k, rr - 1)
    if rr >= 2:
        acc = acc + _mono(ec=1, coeff=2) * _xi_free(k, rr - 2)
    return acc.scale(Fraction(1, rr + 1))


def xi(g: int, k: int, r: int) -> GradedPoly:
    """xi^k_r with gamma powers capped at g."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return _xi_free(k, r).cap("g3", g)


def xi_rs_free(k: int, r: int, s: int) -> GradedPoly:
    """Two-index xi in the free ring; zero when r < 2k or s < 0."""
    out = GradedPoly.zero(_ABG)
    for i in range(0, max(s, -1) + 1):
        bc = binom(r - 2 * k + s - i, r - 2 * k)
        if bc == 0:
            continue
        base = _xi_free(k, r - i)
        if not base:
            continue
        coeff = Fraction(bc * 2**i, factorial(i))
        out = out + _mono(eb=s - i, ec=i, coeff=coeff) * base
    return out


def xi_rs(g: int, k: int, r: int, s: int) -> GradedPoly:
    """xi^k_{r,s}, gamma-capped at g (terms with i > r or i > g drop out)."""
    return xi_rs_free(k, r, s).cap("g3", g)


@dataclass(frozen=True)
class RhoIndex:
    """Index (r, s, t) of a rho generator, with superscript c derived
    from the moduli parameters: c = r + 3s + 2t - 2g + 2 - n."""

    r: int
    s: int
    t: int
    c: int

    @staticmethod
    def make(g: int, n: int, r: int, s: int, t: int) -> "RhoIndex":
        return RhoIndex(r, s, t, r + 3 * s + 2 * t - 2 * g + 2 - n)

    def admissible(self, g: int, n: int) -> bool:
        """Both generator conditions: r+3s+3t > 3g-3+n and r+2s+2t >= 2g-2+n."""
        return (
            self.r + 3 * self.s + 3 * self.t > 3 * g - 3 + n
            and self.r + 2 * self.s + 2 * self.t >= 2 * g - 2 + n
        )

    @property
    def total_degree(self) -> int:
        return self.r + 2 * self.s + 3 * self.t


def rho_c(c: int, r: int, s: int, t: int) -> GradedPoly:
    """rho with an explicit superscript:
    sum_i (c-i)! a^{r-i}/(r-i)! b^{s-i}/(s-i)! (2 g3)^{t+i}/i!."""
    if min(c, r, s, t) < 0:
        raise ValueError("rho indices must be non-negative")
    out = GradedPoly.zero(_ABG)
    for i in range(0, min(c, r, s) + 1):
        coeff = Fraction(
            factorial(c - i) * 2 ** (t + i),
            factorial(r - i) * factorial(s - i) * factorial(i),
        )
        out = out + _mono(ea=r - i, eb=s - i, ec=t + i, coeff=coeff)
    return out


def rho(g: int, n: int, r: int, s: int, t: int) -> GradedPoly:
    """The ideal generator rho^c_{r,s,t} for the (g, n) moduli ring."""
    idx = RhoIndex.make(g, n, r, s, t)
    if idx.c < 0:
        raise ValueError(f"derived superscript c = {idx.c} is negative")
    return rho_c(idx.c, r, s, t)


def gamma_power(g: int) -> GradedPoly:
    return _mono(ec=g + 1)


def ideal_generators(
    g: int, n: int, max_total_degree: int
) -> list[tuple[RhoIndex | None, GradedPoly]]:
    """All admissible rho generators of total degree r+2s+3t <= the bound,
    plus the gamma power (marked with index None) when 3(g+1) fits within
    twice the bound.  Deterministic order: by total degree, then (t, s, r)."""
    if g < 0 or n < 0:
        raise ValueError("g and n must be non-negative")
    found: list[tuple[RhoIndex, GradedPoly]] = []
    for t in range(0, max_total_degree // 3 + 1):
        for s in range(0, (max_total_degree - 3 * t) // 2 + 1):
            for r in range(0, max_total_degree - 3 * t - 2 * s + 1):
                idx = RhoIndex.make(g, n, r, s, t)
                if idx.admissible(g, n):
                    found.append((idx, rho_c(idx.c, r, s, t)))
    found.sort(key=lambda item: (item[0].total_degree, item[0].t, item[0].s, item[0].r))
    out: list[tuple[RhoIndex | None, GradedPoly]] = list(found)
    if 3 * (g + 1) <= 2 * max_total_degree:
        out.append((None, gamma_power(g)))
    return out


# -- coefficient extraction through the even kernels -------------------------

@lru_cache(maxsize=None)
def _phi_series(k: int, r: int, p: int, order: int):
    prod = _series.even_series(_series.T_OVER_SINH, order)
    if k:
        prod = prod * (_series.even_series(_series.INV_COSH_SQ, order) ** k)
    if r:
        prod = prod * (_series.even_series(_series.T_OVER_TANH, order) ** r)
    if p:
        prod = prod * (_series.even_series(_series.ONE_MINUS_TANH_OVER_T, order) ** p)
    return prod


def phi(k: int, m: int, r: int, p: int) -> Fraction:
    """x^m coefficient of the four-kernel product."""
    if min(k, m, r, p) < 0:
        raise ValueError("phi indices must be non-negative")
    return _phi_series(k, r, p, m + 1).coeff(m)


def xi_via_phi(g: int, k: int, r: int) -> GradedPoly:
    """Reconstruct xi^k_r from the kernel coefficients:
    sum_{m,p} phi^k_m(r,p) / (3^{m+p} (r-2m-3p)! p!) a^{r-2m-3p} b^m (2 g3)^p."""
    if r < 0:
        raise ValueError("r must be non-negative")
    out = GradedPoly.zero(_ABG)
    for m in range(0, r // 2 + 1):
        for p in range(0, (r - 2 * m) // 3 + 1):
            value = phi(k, m, r, p)
            if not value:
                continue
            coeff = value * Fraction(
                2**p, 3 ** (m + p) * factorial(r - 2 * m - 3 * p) * factorial(p)
            )
            out = out + _mono(ea=r - 2 * m - 3 * p, eb=m, ec=p, coeff=coeff)
    return out.cap("g3", g)


# -- assembled equivariant families ------------------------------------------

def _u_mono(r: int) -> GradedPoly:
    return GradedPoly.monomial(_ABGU, (0, 0, 0, r))


def _lift(p: GradedPoly) -> GradedPoly:
    """abg -> abgu (u-exponent 0)."""
    return GradedPoly(_ABGU, {(e[0], e[1], e[2], 0): c for e, c in p.terms.items()})


def equivariant_family_84(g: int, n: int, k: int) -> GradedPoly:
    """sum_{r=0}^{g+n} xi^k_{r, g+n-r} u^r, homogeneous of total degree
    2(g+n); every term with r < 2k vanishes, so the class is divisible
    by u^{2k}."""
    if not (0 <= k <= n // 2):
        raise ValueError(f"k must lie in 0..{n // 2}")
    out = GradedPoly.zero(_ABGU)
    for r in range(0, g + n + 1):
        part = xi_rs(g, k, r, g + n - r)
        if part:
            out = out + _lift(part) * _u_mono(r)
    return out


def _f_series_part(g: int, k: int, total_degree: int) -> GradedPoly:
    """Part of sum_{r,s} xi^k_{r,s} u^r in the given total degree."""
    out = GradedPoly.zero(_ABGU)
    if total_degree % 2:
        return out
    half = total_degree // 2
    for r in range(0, half + 1):
        part = xi_rs(g, k, r, half - r)
        if part:
            out = out + _lift(part) * _u_mono(r)
    return out


def theorem86_class(g: int, n: int, k: int) -> GradedPoly:
    """The degree-filtered products

        ((2+u^2-b)^{n/2-k} F^k(u,1))_{2g+n+2k}             (n even)
        ((1+u^2-b)(2+u^2-b)^{(n-1)/2-k} F^k(u,1))_{2g+n+2k+1}  (n odd)

    as gamma-capped classes in a, b, g3, u; divisible by u^{2k}
    (resp. u^{2k+1})."""
    if n < 0:
        raise ValueError("n must be non-negative")
    even = n % 2 == 0
    kmax = n // 2 if even else (n - 1) // 2
    if not (0 <= k <= kmax):
        raise ValueError(f"k must lie in 0..{kmax}")
    u2 = GradedPoly.monomial(_ABGU, (0, 0, 0, 2))
    b = GradedPoly.variable(_ABGU, "b")
    two = GradedPoly.constant(_ABGU, 2)
    one = GradedPoly.constant(_ABGU, 1)
    if even:
        prefactor = (two + u2 - b) ** (n // 2 - k)
        total = 2 * g + n + 2 * k
    else:
        prefactor = (one + u2 - b) * (two + u2 - b) ** ((n - 1) // 2 - k)
        total = 2 * g + n + 2 * k + 1
    out = GradedPoly.zero(_ABGU)
    for d in prefactor.monomial_degrees():
        part = prefactor.homogeneous_part(d)
        f_part = _f_series_part(g, k, total - d // 2)
        if f_part:
            out = out + part * f_part
    return out.cap("g3", g)


@dataclass(frozen=True)
class Theorem88Relation:
    family: str  # "i" or "ii"
    index: int   # i or j
    k: int
    r: int
    s: int
    poly: GradedPoly


def theorem88_relations(g: int, n: int) -> list[Theorem88Relation]:
    """The finite list of ordinary relations of the two index families,

        (i)  k = [n/2]-i, r = n-2i,  s = g+i,  i = 0..[n/2]
        (ii) k = [n/2]+j, r = n+3j,  s = g-j,  j = 1..g

    with class xi^k_{r,s} for even n and xi^k_{r,s} - b xi^k_{r,s-1} for
    odd n; these are relations on the moduli ring at twist n+2.  Indices
    producing s < 0 are skipped."""
    if g < 0 or n < 0:
        raise ValueError("g and n must be non-negative")
    even = n % 2 == 0
    half = n // 2

    def build(k: int, r: int, s: int) -> GradedPoly:
        p = xi_rs(g, k, r, s)
        if not even:
            p = p - _mono(eb=1) * xi_rs(g, k, r, s - 1)
        return p.cap("g3", g)

    out: list[Theorem88Relation] = []
    for i in range(0, half + 1):
        k, r, s = half - i, n - 2 * i, g + i
        if s < 0:
            continue
        out.append(Theorem88Relation("i", i, k, r, s, build(k, r, s)))
    for j in range(1, g + 1):
        k, r, s = half + j, n + 3 * j, g - j
        if s < 0:
            continue
        out.append(Theorem88Relation("ii", j, k, r, s, build(k, r, s)))
    return out

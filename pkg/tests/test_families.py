from fractions import Fraction
from math import factorial

import pytest

from higgsrel.families import (
    RhoIndex,
    binom,
    equivariant_family_84,
    gamma_power,
    ideal_generators,
    phi,
    rho,
    rho_c,
    theorem86_class,
    theorem88_relations,
    xi,
    xi_rs,
    xi_via_phi,
)
from higgsrel.poly import abg_table, abgu_table, poly_parse

F = Fraction
ABG = abg_table()
ABGU = abgu_table()


def P(text):
    return poly_parse(text, ABG)


def test_binom_conventions():
    assert binom(-1, 0) == 0
    assert binom(3, -1) == 0
    assert binom(2, 3) == 0
    assert binom(5, 2) == 10


def test_xi_base_cases():
    assert xi(2, 0, 0) == P("1")
    assert not xi(2, 0, -1)
    assert xi(2, 0, 1) == P("a")
    assert xi(2, 1, 1) == P("a")


def test_xi_spec_values():
    assert xi(2, 0, 2) == P("1/2*a^2 + 1/2*b")
    assert xi(2, 1, 2) == P("1/2*a^2 - 1/2*b")


def test_xi_gamma_cap():
    # high-index xi at small g never carries gamma powers above g
    p = xi(2, 0, 12)
    i = ABG.index("g3")
    assert all(e[i] <= 2 for e in p.terms)


def test_xi_rs_values():
    assert not xi_rs(2, 1, 1, 3)  # zero when r < 2k
    assert xi_rs(2, 0, 0, 3) == P("b^3")
    assert xi_rs(2, 0, 1, 1) == P("2*a*b + 2*g3")
    assert not xi_rs(2, 0, 1, -1)


def test_rho_values():
    assert rho(2, 1, 0, 2, 0) == P("3*b^2")
    assert rho(2, 0, 1, 1, 0) == P("2*a*b + 2*g3")
    # lowest-degree relation at general genus: g a b^{g-1} + (g-1) b^{g-2} 2 g3
    assert rho(3, 0, 1, 2, 0) == P("3*a*b^2 + 4*b*g3")
    # single-term case c = 0, and the constant case at genus 0
    assert rho(1, 0, 0, 0, 0) == P("1")
    assert rho(0, 0, 0, 0, 0) == P("2")


def test_rho_rejects_negative_superscript():
    with pytest.raises(ValueError):
        rho(5, 0, 1, 0, 0)


def test_rho_index_admissibility():
    # (1,1,0) at (2,0): 4 > 3 and 3 >= 2
    assert RhoIndex.make(2, 0, 1, 1, 0).admissible(2, 0)
    # (0,1,0) fails the strict inequality: 3 > 3 is false
    assert not RhoIndex.make(2, 0, 0, 1, 0).admissible(2, 0)


def test_ideal_generators_examples():
    gens = ideal_generators(2, 0, 3)
    indexed = [idx for idx, _ in gens if idx is not None]
    assert [(i.r, i.s, i.t) for i in indexed] == [(1, 1, 0)]
    # gamma^{g+1} appears once the bound is large enough: 3(g+1) <= 2*max
    assert all(idx is not None for idx, _ in gens)
    gens9 = ideal_generators(2, 0, 9)
    assert any(idx is None and p == gamma_power(2) for idx, p in gens9)


def test_ideal_generators_all_admissible():
    for idx, p in ideal_generators(3, 2, 8):
        if idx is not None:
            assert idx.admissible(3, 2)
            assert p.ordinary_degree() == 2 * idx.total_degree


def test_phi_values():
    for k in (0, 1, 2):
        for r in (0, 1, 5):
            assert phi(k, 0, r, 0) == 1
    assert phi(0, 1, 0, 0) == F(-1, 2)
    assert phi(0, 1, 2, 0) == F(3, 2)


def test_xi_via_phi_examples():
    assert xi_via_phi(2, 0, 2) == P("1/2*a^2 + 1/2*b")
    assert xi_via_phi(2, 0, 0) == P("1")
    assert xi_via_phi(4, 2, 5) == xi(4, 2, 5)


def test_xi_via_phi_matches_recursion():
    for g in (2, 3):
        for k in (0, 1, 2, 3):
            for r in range(0, 9):
                assert xi_via_phi(g, k, r) == xi(g, k, r)


def test_equivariant_family_84_assembly():
    g, n, k = 2, 0, 0
    cls = equivariant_family_84(g, n, k)
    expected_parts = {r: xi_rs(g, k, r, g + n - r) for r in range(0, g + n + 1)}
    for r, part in cls.split_by("u").items():
        assert part.project(ABG) == expected_parts[r]
    assert cls.ordinary_degree() == 2 * (2 * (g + n))


def test_equivariant_family_84_u_divisibility():
    for g in (2, 3):
        for n in (2, 3):
            for k in range(0, n // 2 + 1):
                cls = equivariant_family_84(g, n, k)
                if cls:
                    assert min(e[3] for e in cls.terms) >= 2 * k


def test_equivariant_family_84_k_range():
    with pytest.raises(ValueError):
        equivariant_family_84(2, 0, 1)


def test_theorem86_examples():
    # with n = 0, k = 0 the prefactor is 1 and the class is the total-degree-2g
    # part of the generating series, which matches the n = 0 family
    assert theorem86_class(2, 0, 0) == equivariant_family_84(2, 0, 0)
    cls = theorem86_class(2, 0, 0)
    parts = {r: p.project(ABG) for r, p in cls.split_by("u").items()}
    for r, part in parts.items():
        assert part == xi_rs(2, 0, r, 2 - r)
    # odd twist: one extra power of u beyond 2k
    cls = theorem86_class(2, 1, 0)
    assert cls.ordinary_degree() == 2 * (2 * 2 + 1 + 1)
    assert min(e[3] for e in cls.terms) >= 1
    # divisibility by u^{2k} at even twist
    cls = theorem86_class(2, 2, 1)
    assert min(e[3] for e in cls.terms) >= 2


def test_theorem86_k_range():
    with pytest.raises(ValueError):
        theorem86_class(2, 0, 1)
    with pytest.raises(ValueError):
        theorem86_class(2, 1, 1)


def test_theorem88_list_even():
    rels = theorem88_relations(2, 0)
    by_family = {(r.family, r.index): r for r in rels}
    first = by_family[("i", 0)]
    assert (first.k, first.r, first.s) == (0, 0, 2)
    assert first.poly == P("b^2")
    second = by_family[("ii", 1)]
    assert (second.k, second.r, second.s) == (1, 3, 1)
    assert second.poly == xi_rs(2, 1, 3, 1)
    assert ("ii", 2) in by_family


def test_theorem88_list_odd_uses_difference():
    rels = theorem88_relations(2, 1)
    first = next(r for r in rels if r.family == "i" and r.index == 0)
    expected = xi_rs(2, 0, 1, 2) - P("b") * xi_rs(2, 0, 1, 1)
    assert first.poly == expected.cap("g3", 2)
    # this class is exactly the lowest-degree generator at twist 3
    assert first.poly == P("a*b^2 + 2*b*g3")


def test_rho_c_lowest_degree_product_form():
    # rho^s_{r,s,0} = b^{s-r} (a b + 2 g3)^r / r!  for s >= r
    ab2g = P("a*b + 2*g3")
    for r, s in ((0, 2), (1, 2), (2, 2), (2, 3)):
        lhs = rho_c(s, r, s, 0)
        rhs = (P("b") ** (s - r) * ab2g ** r).scale(F(1, factorial(r)))
        assert lhs == rhs

from fractions import Fraction

import pytest

from higgsrel.families import theorem88_relations
from higgsrel.localize import relation_oracle_slice
from higgsrel.poly import abg_table, poly_parse
from higgsrel.verify import (
    EXPRESS_COUNTEREXAMPLES_BETA_DIFF,
    EXPRESS_COUNTEREXAMPLES_PLAIN,
    _ekhad_F,
    _ekhad_G,
    betti_assembly,
    check_main_theorem,
    dim_HI,
    dim_HI_closed,
    dim_quotient,
    dim_report,
    ekhad_checks,
    express_xi_in_rho,
    ideal_slice_basis,
    l_matrix_check,
    primitive_dim,
    region_count,
    region_count_closed,
    simple_form_check,
    sweep_express,
    theorem88_oracle_membership,
)

ABG = abg_table()
F = Fraction


def test_dim_HI_examples():
    assert dim_HI(2, 0) == 6
    assert dim_HI(2, 1) == 9
    assert dim_HI(3, 0) == 18


def test_region_count_examples():
    assert region_count(2, 0) == 6
    assert region_count(2, 1) == 9
    assert region_count(3, 0) == 18


def test_closed_forms_match_enumeration():
    for g in (2, 3, 4):
        for n in range(0, 5):
            assert dim_HI_closed(g, n) == dim_HI(g, n)
            assert region_count_closed(g, n) == region_count(g, n)


def test_dim_quotient_examples():
    dims, total = dim_quotient(2, 0)
    assert total == 6
    # degree-3 slice: three monomials minus the single relation
    assert dims[3] == 2
    assert dim_quotient(2, 1)[1] == 9


def test_dim_report_triple_equality():
    r = dim_report(2, 2)
    assert r.all_equal
    d = r.to_json_dict()
    assert d["quotient_total"] == d["region_count"] == d["component_sum"] == 12


def test_check_main_theorem_small():
    ok, detail = check_main_theorem(2, 0, 5)
    assert ok
    assert detail[3]["oracle_dim"] == 1 and detail[3]["ideal_dim"] == 1


def test_ideal_slice_basis_membership():
    basis = ideal_slice_basis(2, 0, 3)
    assert basis.dim == 1
    assert basis.member(poly_parse("2*a*b + 2*g3", ABG))


def test_simple_form_examples():
    assert simple_form_check(2, 2)
    assert simple_form_check(3, 2)
    assert simple_form_check(2, 4)
    with pytest.raises(ValueError):
        simple_form_check(2, 1)


def test_express_examples():
    res = express_xi_in_rho(2, 0, 0, 1, 1, "plain")
    assert res.feasible
    assert res.coefficients == {(2, 1, 1, 0): F(1)}
    res2 = express_xi_in_rho(2, 0, 0, 0, 2, "plain")
    assert res2.feasible
    assert res2.coefficients == {(2, 0, 2, 0): F(1)}
    # support constraints: only w <= r-2k and u+3w <= r appear
    res3 = express_xi_in_rho(3, 0, 1, 4, 2, "plain")
    assert res3.feasible
    for c, u, v, w in res3.rho_indices_used():
        assert w <= 4 - 2 and u + 3 * w <= 4


def test_express_beta_diff_smallest_case():
    res = express_xi_in_rho(2, 0, 0, 1, 1, "beta_diff")
    assert res.feasible
    assert res.coefficients == {(1, 1, 1, 0): F(1)}


def test_express_validity_ranges():
    with pytest.raises(ValueError):
        express_xi_in_rho(2, 0, 1, 1, 0, "plain")
    with pytest.raises(ValueError):
        express_xi_in_rho(2, 0, 1, 2, 0, "beta_diff")
    with pytest.raises(ValueError):
        express_xi_in_rho(2, 0, 0, 1, 1, "other")


def test_express_counterexamples_are_infeasible():
    for k, r, s in EXPRESS_COUNTEREXAMPLES_PLAIN:
        assert not express_xi_in_rho(2, 0, k, r, s, "plain").feasible
    for k, r, s in EXPRESS_COUNTEREXAMPLES_BETA_DIFF:
        assert not express_xi_in_rho(2, 0, k, r, s, "beta_diff").feasible


def test_express_sweep_matches_frozen_sets():
    ok, report = sweep_express()
    assert ok, report


def test_theorem88_members_use_admissible_rho_support():
    # the expressibility route for the listed families only ever uses
    # generator-admissible rho indices at the shifted twist
    for g in (2, 3):
        for n in (0, 1, 2):
            variant = "plain" if n % 2 == 0 else "beta_diff"
            for rel in theorem88_relations(g, n):
                res = express_xi_in_rho(g, n + 2, rel.k, rel.r, rel.s, variant)
                assert res.feasible, (g, n, rel)
                for c, u, v, w in res.rho_indices_used():
                    assert (
                        u + 3 * v + 3 * w > 3 * g - 3 + (n + 2)
                        and u + 2 * v + 2 * w >= 2 * g - 2 + (n + 2)
                    ), (g, n, rel, (c, u, v, w))


def test_l_matrix_examples():
    assert l_matrix_check(10, 4)
    assert l_matrix_check(12, 6)
    with pytest.raises(ValueError):
        l_matrix_check(6, 5)


def test_ekhad_spec_point():
    # r'=2, s'=3 (so m = s'-s = 2), p=1, w=2, s=1, i=0
    rp, m, p, w, s, i = 2, 2, 1, 2, 1, 0
    sp = s + m
    g1 = _ekhad_G(rp, m, p, w, s, i)
    g2 = _ekhad_G(rp, m, p, w, s, i + 1)
    assert g1 is not None and g2 is not None
    lhs = g2 - g1
    rhs = (rp + s + 1 - w) * (rp + sp + 2 - w) * _ekhad_F(rp, m, p, w, s, i) - (
        s + 1
    ) * (rp + sp + 2 - p - w) * _ekhad_F(rp, m, p, w, s + 1, i)
    assert lhs == rhs


def test_ekhad_nj_spec_point():
    from math import factorial

    q, w, wp = 10, 1, 3

    def N(j):
        return F(
            (-1) ** (wp + j) * (q + 1 - 2 * wp) * factorial(q - w - j),
            factorial(wp - j) * factorial(q + 1 - wp - j) * factorial(j - w),
        )

    for j in (1, 2):
        lhs = (q + 1 - w - wp) * (wp - w) * N(j)
        rhs = (j - w) * (q + 1 - w - j) * N(j) - (j + 1 - w) * (q - w - j) * N(j + 1)
        assert lhs == rhs


def test_ekhad_checks_pass():
    ok, report = ekhad_checks()
    assert ok
    assert report["fg_checked"] > 1000
    assert report["nj_checked"] > 50


def test_primitive_dims():
    assert primitive_dim(2, 1) == 4  # C(4,1) - C(4,-1)
    assert primitive_dim(2, 2) == 5  # C(4,2) - C(4,0)


def test_betti_assembly_g2():
    # the invariant part of the full graded dimension count at (2, 0):
    # 1, 0, 1, 4, 2, 4, 2 in ordinary degrees 0..6
    assert betti_assembly(2, 0, 8) == [1, 0, 1, 4, 2, 4, 2, 0, 0]
    # the k = 0 summand contributes the quotient total
    assert sum(dim_quotient(2, 0)[0]) == 6


def test_theorem88_oracle_membership_cell():
    ok, detail = theorem88_oracle_membership(2, 0)
    assert ok
    assert all(entry["member"] for entry in detail)

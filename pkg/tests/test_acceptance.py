"""Acceptance suite: one test (and one printed pass/fail line) per
criterion.  Everything is exact rational arithmetic; there are no
tolerances anywhere."""

from fractions import Fraction

from higgsrel.families import binom, xi, xi_rs
from higgsrel.localize import n_model
from higgsrel.poly import GradedPoly, abg_table, poly_parse
from higgsrel.verify import (
    EXPRESS_COUNTEREXAMPLES_BETA_DIFF,
    EXPRESS_COUNTEREXAMPLES_PLAIN,
    dim_report,
    ekhad_checks,
    l_matrix_check,
    simple_form_check,
    sweep_closure,
    sweep_equivariant,
    sweep_express,
    sweep_main,
    sweep_series,
    sweep_sympow,
    theorem88_oracle_membership,
)

ABG = abg_table()


def report(number: int, ok: bool, summary: str) -> None:
    print(f"ACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} - {summary}")
    assert ok, f"criterion {number} failed: {summary}"


def test_criterion_1_dimension_triple_equality():
    reports = {
        (g, n): dim_report(g, n) for g in (2, 3, 4) for n in (0, 1, 2, 3, 4)
    }
    ok = all(r.all_equal for r in reports.values())
    spots = (
        reports[(2, 0)].quotient_total == 6
        and reports[(2, 1)].quotient_total == 9
        and reports[(3, 0)].quotient_total == 18
    )
    report(
        1,
        ok and spots,
        "dim_quotient = region_count = dim_HI for g in 2..4, n in 0..4;"
        " spot values 6 / 9 / 18",
    )


def test_criterion_2_main_theorem_oracle_equality():
    cells = [(g, n, 3 * g + 3 + n) for g, n in ((2, 0), (2, 1), (2, 2), (3, 0), (3, 1))]
    ok, detail = sweep_main(cells)
    report(
        2,
        ok,
        "localization oracle slice == rho ideal slice for all five (g, n)"
        " cells, every degree D <= 3g+3+n",
    )


def test_criterion_3_equivariant_relations():
    ok, detail = sweep_equivariant(g_values=(2, 3, 4), n_values=(0, 1, 2, 3))
    report(
        3,
        ok,
        f"all {detail['classes_checked']} assembled classes are equivariant"
        " relations at twist n+2 with the stated u-divisibility",
    )


def test_criterion_4_xi_cross_validation():
    ok, detail = sweep_series(order=10)
    # Theorem 7.5 on its valid domain r >= 2k (below it the left side is
    # identically zero by the r < 2k convention; see the ledger), plus
    # the two-index stability
    beta = poly_parse("b", ABG)
    t75 = True
    for g in (2, 3):
        for k in (0, 1, 2):
            for r in range(2 * k, 6):
                for s in range(0, 6):
                    rhs = GradedPoly.zero(ABG)
                    for l in range(0, s + 1):
                        bc = binom(r + l, r) + binom(r + l - 1, r)
                        rhs = rhs + (xi(g, k, s - l) * xi(g, k, r + s + l)).scale(
                            Fraction((-1) ** (s - l) * bc)
                        )
                    if xi_rs(g, k, r, s) != rhs.cap("g3", g):
                        t75 = False
    stability = True
    for g in (2, 3, 4):
        for k in (0, 1, 2):
            base = xi_rs(g, k, 2 * k, g)
            for l in (1, 2, 3):
                if xi_rs(g, k, 2 * k, g + l) != ((beta ** l) * base).cap("g3", g):
                    stability = False
    report(
        4,
        ok and t75 and stability,
        "xi_via_phi == xi (r <= 10, k <= 3, g <= 4); ODE and bivariate"
        " checks at order 10; product identity for r >= 2k, r,s <= 5;"
        " two-index stability",
    )


def test_criterion_5_symmetric_product_engine():
    ok, detail = sweep_sympow(seed=0)
    report(
        5,
        ok,
        f"residue == pairing on {detail['residue_cases']} random cases"
        f" (m <= 8, g <= 4); vanishing lemma on {detail['lemma51_cases']}"
        f" hypothesis points; peeling equivalence on"
        f" {detail['lemma101_cases']} classes",
    )


def test_criterion_6_closure_properties():
    ok, detail = sweep_closure(g_values=(2, 3), n_values=(0, 1, 2))
    report(
        6,
        ok,
        "u-derivative maps kernels of twist n+2 into twist n, and"
        " (u^2 - b) maps twist n into twist n+1, on all basis elements",
    )


def test_criterion_7_expressibility():
    ok, rep = sweep_express(k_max=2, r_max=8, s_max=6)
    report(
        7,
        ok,
        "xi classes expressible over the stated rho support everywhere on"
        " the grid except the proven counterexamples to the printed"
        f" statement, plain {list(EXPRESS_COUNTEREXAMPLES_PLAIN)} and"
        f" beta-difference {list(EXPRESS_COUNTEREXAMPLES_BETA_DIFF)},"
        " which are exactly the infeasible points",
    )


def test_criterion_8_n_model_self_check():
    ok = True
    for g in (2, 3, 4, 5):
        n_model(g)  # construction raises on any Hilbert mismatch
    dims_ok = n_model(2).quotient_dimensions() == [1, 1, 1, 1]
    report(
        8,
        ok and dims_ok,
        "stable-bundle model Hilbert series matches the three-relation"
        " presentation for g in {2,3,4,5}; g=2 dims are 1,1,1,1",
    )


def test_criterion_9_inversion_and_telescoping():
    lmat = all(l_matrix_check(q, q // 2) for q in (4, 6, 8, 10, 12))
    ek_ok, ek_report = ekhad_checks(seed=0)
    report(
        9,
        lmat and ek_ok,
        f"L * L^-1 = I exactly for q <= 12;"
        f" {ek_report['nj_checked']} + {ek_report['fg_checked']} recurrence"
        f" points hold ({ek_report['fg_skipped']} zero-denominator points"
        " skipped and reported)",
    )


def test_criterion_10_theorem88_membership_and_simple_form():
    ok = True
    for g in (2, 3):
        for n in (0, 1, 2):
            cell_ok, _ = theorem88_oracle_membership(g, n)
            ok = ok and cell_ok
    simple = simple_form_check(2, 2) and simple_form_check(3, 2)
    report(
        10,
        ok and simple,
        "all listed relations are members of the twist-(n+2) oracle at"
        " their degrees (g <= 3, n <= 2); lowest-degree product forms are"
        " ideal members at (2,2) and (3,2)",
    )

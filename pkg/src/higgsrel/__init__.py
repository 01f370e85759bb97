"""higgsrel: exact-arithmetic construction and verification of the
relation ideal of the rank-2 Higgs-bundle moduli cohomology ring.

The invariant generators live in Q[a, b, g3] (ordinary degrees 2, 4, 6,
with g3 the invariant cube of the odd generators); relations are
certified by restricting equivariant extensions to the circle-action
fixed locus and checked against the explicit rho-generator ideal, all
over exact rationals.
"""

from .poly import (
    GradedPoly,
    PolyParseError,
    Rational,
    VarTable,
    abg_table,
    abgu_table,
    degree_slice_monomials,
    eta_theta_table,
    eta_theta_u_table,
    eta_xi_table,
    moduli_table,
    poly_format,
    poly_parse,
    symprod_table,
)
from .linalg import SliceBasis, slice_span
from .series import (
    EVEN_SERIES_KINDS,
    INV_COSH_SQ,
    ONE_MINUS_TANH_OVER_T,
    T_OVER_SINH,
    T_OVER_TANH,
    TruncatedSeries,
    bivariate_identity_check,
    even_series,
    f0_series,
    ode_check_F0,
)
from .families import (
    RhoIndex,
    Theorem88Relation,
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
from .sympow import (
    LemmaHypothesisError,
    SymProdSpace,
    evaluate_full,
    evaluate_invariant,
    is_zero_class,
    lemma51_check,
    lemma101_check,
    residue_evaluate,
)
from .localize import (
    FixedComponent,
    NModel,
    NModelError,
    RelationReport,
    equivariant_kernel_slice,
    fixed_components,
    is_equivariant_relation,
    n_membership,
    n_model,
    relation_oracle_slice,
    restrict,
)
from .verify import (
    DimReport,
    betti_assembly,
    check_main_theorem,
    dim_HI,
    dim_quotient,
    dim_report,
    ekhad_checks,
    express_xi_in_rho,
    ideal_slice_basis,
    l_matrix_check,
    region_count,
    simple_form_check,
)

__version__ = "0.1.0"

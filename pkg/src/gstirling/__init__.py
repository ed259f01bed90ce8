"""Exact arithmetic for a two-parameter Stirling-type polynomial family.

The family is defined through its exponential generating function
(1-t)**alpha * exp(x*((1-t)**beta - 1)); the package constructs its
coefficient triangle, checks its basis-change / recurrence / operator
identities in exact rational arithmetic, and decides real-rootedness
claims through signed remainder chains.
"""

from .family import (
    FamilyParams,
    addition,
    bell_poly,
    derivative_recurrence_step,
    eval_dobinski,
    family_assoc_lah,
    family_laguerre,
    family_U,
    family_V,
    from_bell_basis,
    lah_rebase_report,
    monomial_to_family,
    poly,
    rebase,
    rising_expansion,
    to_bell_basis,
    verify_bell_basis_forward,
)
from .operators import (
    ExpMonomialSum,
    derivative,
    euler_shift,
    verify_bell_operator,
    verify_rodrigues_first,
    verify_rodrigues_second,
)
from .qpoly import QPolynomial, poly_divexact, poly_gcd
from .rationals import (
    Rational,
    WireFormatError,
    binom,
    falling,
    format_rational,
    parse_rational,
    rising,
)
from .series import (
    QXSeries,
    binomial_series,
    gf_polynomials,
    series_exp,
    series_mul,
    verify_gf_derivative,
)
from .stirling import (
    CompositionReport,
    GStirlingTable,
    composition_report,
    gstirling_egf,
    gstirling_explicit,
    gstirling_inverse,
    gstirling_table,
    lah,
    partial_bell,
    partial_r_bell,
    rlah,
    stirling1,
    stirling2,
    verify_composition,
    verify_rbell_connection,
)
from .zeros import (
    RegionReport,
    SturmChain,
    all_roots_real,
    check_newton_logconcave,
    classify_region,
    count_real_roots,
    isolate_roots,
    region_report,
    square_free_part,
    sturm_chain,
)

__version__ = "0.1.0"

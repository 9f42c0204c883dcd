"""Exact plurigenera of canonical threefolds and effective birationality bounds.

Everything is computed in exact arbitrary-precision arithmetic (Python
ints and fractions.Fraction); every closed form in the package is
cross-checked against an independent brute-force oracle, runnable via
``plurigenus verify`` or :mod:`plurigenus.oracle`.
"""

from .basket import Basket, QuotientSingularity, fletcher_dominates, l_closed, l_direct, l_onewave
from .bounds import (
    DEFAULT_EXPAND_THRESHOLD,
    BoundReport,
    ChernData,
    HodgeData,
    Section4Bounds,
    bezout_bound,
    birationality_certificate,
    birationality_exponent,
    bound_report,
    chi_upper_bound,
    defranchis_threefold_bound,
    dual_degree,
    hanamura_m0,
    kollar_exponent,
    map_count_bound,
    section4_bounds,
    validate_p,
)
from .errors import DataConsistencyError, DocumentError, DomainError
from .exact import (
    digit_count,
    format_rational,
    lcm_range,
    mod_inverse,
    parse_rational,
    pow_digit_count,
    residue,
)
from .oracle import VerificationReport, run_checks
from .riemann_roch import (
    ThreefoldData,
    ValidationReport,
    chi_mK,
    hilbert_coefficients,
    plurigenus,
    plurigenus_lower_bound,
    validate,
)

__version__ = "0.1.0"

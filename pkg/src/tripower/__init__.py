"""Exact integer triangles, finite differences, and power-sum identities.

Everything here computes over int and fractions.Fraction only; no value
is ever rounded.  The subpackages group by task:

  exactmath   binomials, exact powers, truncated decimal rendering
  triangles   coefficient triangles and row/column generators
  findiff     forward differences and geometric partial sums
  expand      interchangeable expansions of x^n into explicit sums
  expseries   exponential-series partial sums with exact tail bounds
  audit       the identity registry and its grid evaluator
  oeis        b-file parsing, fetching, and sequence cross-checks
"""

from .audit import audit, audit_all, catalog, face_count_claim, registry
from .exactmath import binomial, int_pow, rat_pow, truncate_decimal
from .expand import (
    BASIC_STRATEGIES,
    expand_binomial_pair,
    expand_power,
    gen_binomial,
    parse_strategy,
)
from .expseries import exp_convergence_report, exp_minus_e_partial, exp_partial
from .findiff import difference_table, forward_diff_seq, gsum, telescope_power
from .triangles import (
    ab_coefficients,
    parse_kind,
    rascal_coeff,
    triangle_row,
    u_coeff,
    v_coeff,
)

__version__ = "0.1.0"

__all__ = [
    "BASIC_STRATEGIES",
    "__version__",
    "ab_coefficients",
    "audit",
    "audit_all",
    "binomial",
    "catalog",
    "difference_table",
    "exp_convergence_report",
    "exp_minus_e_partial",
    "exp_partial",
    "expand_binomial_pair",
    "expand_power",
    "face_count_claim",
    "forward_diff_seq",
    "gen_binomial",
    "gsum",
    "int_pow",
    "parse_kind",
    "parse_strategy",
    "rascal_coeff",
    "rat_pow",
    "registry",
    "telescope_power",
    "triangle_row",
    "truncate_decimal",
    "u_coeff",
    "v_coeff",
]

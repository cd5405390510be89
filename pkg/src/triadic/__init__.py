"""Exact and truncated 3-adic verification of congruences for central binomial sums."""

from .claims import ClaimId, ClaimResult, DomainError, Mode, PrecisionError
from .lucas import LucasParams, check_lemma21, lucas_u, lucas_u_closed, u_neg11_fast
from .padic import QuadExt, TruncatedPadic, cube_root_check, lemma42_closed_form_check, lemma42_partial, omega, padic_log
from .sums import alt_sum, central_sum, convolution_sides, f_of_a, scaled_sum
from .theorems import (
    check_nk2kk,
    check_scc1,
    check_scc2,
    check_scc3,
    check_scc4,
    check_scc5,
    check_ssz,
    check_sun12,
)
from .valuation import (
    INFINITY,
    binomial,
    congruent_mod_power,
    generalized_binomial,
    nu,
    nu_binomial,
    nu_factorial,
)

__version__ = "0.1.0"

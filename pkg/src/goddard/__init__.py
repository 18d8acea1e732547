"""Exact formal power series toolkit for the Goddard series S_k, A_k, B_k."""

from goddard.errors import (
    GoddardError,
    NegativePowerResidue,
    NonzeroConstantTerm,
    NonzeroLowOrder,
    OrderMismatch,
    UsageError,
    ZeroDenominator,
)
from goddard.exact import ExactRational, binomial, factorial, rational_make, render
from goddard.families import (
    ClosedFormExpression,
    ClosedTerm,
    Family,
    GoddardSpec,
    Trig,
    VerificationReport,
    bivariate_S,
    closed_form,
    closed_to_series,
    direct_series,
    verify_theorem,
)
from goddard.numeric import NumericSample, eval_closed, eval_partial, sample_grid, tail_bound
from goddard.series import (
    BivariateTruncatedSeries,
    TruncatedSeries,
    elementary_cos,
    elementary_sin,
    series_add,
    series_compose,
    series_eval_float,
    series_mul,
    series_shift_div,
)

__all__ = [
    "BivariateTruncatedSeries",
    "ClosedFormExpression",
    "ClosedTerm",
    "ExactRational",
    "Family",
    "GoddardError",
    "GoddardSpec",
    "NegativePowerResidue",
    "NonzeroConstantTerm",
    "NonzeroLowOrder",
    "NumericSample",
    "OrderMismatch",
    "Trig",
    "TruncatedSeries",
    "UsageError",
    "VerificationReport",
    "ZeroDenominator",
    "binomial",
    "bivariate_S",
    "closed_form",
    "closed_to_series",
    "direct_series",
    "elementary_cos",
    "elementary_sin",
    "eval_closed",
    "eval_partial",
    "factorial",
    "rational_make",
    "render",
    "sample_grid",
    "series_add",
    "series_compose",
    "series_eval_float",
    "series_mul",
    "series_shift_div",
    "tail_bound",
    "verify_theorem",
]

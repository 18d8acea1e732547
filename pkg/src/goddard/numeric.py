"""Double-precision evaluation of partial sums and closed forms."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from functools import lru_cache

from goddard.errors import UsageError
from goddard.families import Family, GoddardSpec, Trig, closed_form, closed_to_series
from goddard.series import TruncatedSeries, series_eval_float

# below this |y| the A/B closed forms are evaluated through their Taylor expansion
NEAR_ZERO = 0.01
FALLBACK_ORDER = 12
MONOTONE_WINDOW = 5


@dataclass(frozen=True)
class NumericSample:
    y: float
    partial_sum: float
    closed_value: float
    abs_error: float
    tail_bound: float
    bound_valid: bool
    terms_used: int

    def to_json(self) -> dict:
        return asdict(self)


def _pow(y: float, p: int) -> float:
    try:
        return y**p
    except OverflowError:
        return math.copysign(math.inf, y) if p % 2 else math.inf


def _sum(values: list[float]) -> float:
    try:
        return math.fsum(values)
    except (OverflowError, ValueError):
        # fsum refuses inf - inf and intermediate overflow; let IEEE decide
        return sum(values)


def term_value(spec: GoddardSpec, n: int, y: float) -> float:
    coef, power = spec.term(n)
    if coef == 0:
        return 0.0
    # the exact rational is rounded once; no overflow from the raw factorial
    return float(coef) * _pow(y, power)


def eval_partial(spec: GoddardSpec, y: float, n_terms: int) -> float:
    """Sum of summands n = 1..n_terms of the defining series at ``y``."""
    if n_terms < 1:
        raise UsageError("n_terms must be at least 1")
    return _sum([term_value(spec, n, y) for n in range(1, n_terms + 1)])


@lru_cache(maxsize=None)
def _fallback_series(spec: GoddardSpec) -> TruncatedSeries:
    return closed_to_series(closed_form(spec), FALLBACK_ORDER)


_TRIG = {Trig.NONE: lambda y: 1.0, Trig.SIN: math.sin, Trig.COS: math.cos}


def eval_closed(spec: GoddardSpec, y: float) -> float:
    if spec.family is not Family.S and abs(y) < NEAR_ZERO:
        return series_eval_float(_fallback_series(spec), y)
    values = [float(t.coef) * _pow(y, t.power) * _TRIG[t.trig](y) for t in closed_form(spec)]
    return _sum(values)


def tail_bound(spec: GoddardSpec, y: float, n_terms: int) -> tuple[float, bool]:
    """First omitted term magnitude, and whether term magnitudes are
    non-increasing over the next few summands (which is what makes it a bound)."""
    if n_terms < 1:
        raise UsageError("n_terms must be at least 1")
    mags = [abs(term_value(spec, m, y)) for m in range(n_terms, n_terms + MONOTONE_WINDOW + 1)]
    valid = all(b <= a for a, b in zip(mags, mags[1:]))
    return mags[1], valid


def sample(spec: GoddardSpec, y: float, n_terms: int) -> NumericSample:
    partial = eval_partial(spec, y, n_terms)
    closed = eval_closed(spec, y)
    bound, valid = tail_bound(spec, y, n_terms)
    return NumericSample(y, partial, closed, abs(partial - closed), bound, valid, n_terms)


def grid_points(y_min: float, y_max: float, steps: int) -> list[float]:
    if steps < 1:
        raise UsageError("steps must be at least 1")
    if not y_min <= y_max:
        raise UsageError(f"empty interval [{y_min}, {y_max}]")
    y_min, y_max = float(y_min), float(y_max)
    width = y_max - y_min
    return [y_min + width * i / steps for i in range(steps)] + [y_max]


def sample_grid(
    spec: GoddardSpec, y_min: float, y_max: float, steps: int, n_terms: int
) -> list[NumericSample]:
    """``steps + 1`` evenly spaced samples, both endpoints included."""
    return [sample(spec, y, n_terms) for y in grid_points(y_min, y_max, steps)]

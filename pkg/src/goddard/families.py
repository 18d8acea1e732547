"""The series S_k, A_k, B_k, their closed forms, and exact verification.

For n >= 1 the defining sums are

    S_k(y) = sum (-1)^(n+1) C(2n+1, k)    y^(2n+1) / (2n+1)!
    A_k(y) = sum (-1)^(n+1) C(2n+1, 2k)   y^(2n-1) / (2n+1)!
    B_k(y) = sum (-1)^(n+1) C(2n+1, 2k+1) y^(2n-2) / (2n+1)!

so A_k = S_{2k} / y^2 and B_k = S_{2k+1} / y^3. Closed forms are sums of
``c * y^a * {1, sin y, cos y}`` terms. The exponent ``a`` may be negative for
A and B; the negative powers always cancel on expansion.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Optional

from goddard.errors import NegativePowerResidue, NonzeroLowOrder
from goddard.exact import binomial, factorial, render
from goddard.series import (
    BivariateTruncatedSeries,
    TruncatedSeries,
    elementary_cos,
    elementary_sin,
    series_add,
    series_mul,
    series_shift_div,
)


class Family(str, enum.Enum):
    S = "S"
    A = "A"
    B = "B"


class Trig(str, enum.Enum):
    NONE = "none"
    SIN = "sin"
    COS = "cos"


_TRIG_RANK = {Trig.NONE: 0, Trig.SIN: 1, Trig.COS: 2}


@dataclass(frozen=True)
class GoddardSpec:
    family: Family
    k: int

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if not isinstance(self.k, int) or self.k < 0:
            raise ValueError(f"k must be a nonnegative integer, got {self.k!r}")

    def __str__(self):
        return f"{self.family.value}_{self.k}"

    def parent(self) -> tuple[int, int]:
        """Return ``(j, m)`` with this series equal to ``S_j / y**m``."""
        if self.family is Family.S:
            return self.k, 0
        if self.family is Family.A:
            return 2 * self.k, 2
        return 2 * self.k + 1, 3

    def term(self, n: int) -> tuple[Fraction, int]:
        """Coefficient and y-exponent of the n-th summand (n >= 1)."""
        j, m = self.parent()
        coef = Fraction((-1) ** (n + 1) * binomial(2 * n + 1, j), factorial(2 * n + 1))
        return coef, 2 * n + 1 - m


@dataclass(frozen=True)
class ClosedTerm:
    coef: Fraction
    power: int
    trig: Trig = Trig.NONE

    def as_tuple(self):
        return (self.coef, self.power, self.trig.value)


@dataclass(frozen=True)
class ClosedFormExpression:
    """Finite sum of ``coef * y**power * trig(y)``.

    Construction merges like terms and drops zeros, so equal expressions
    compare equal.
    """

    terms: tuple[ClosedTerm, ...] = ()

    def __post_init__(self):
        merged: dict[tuple[int, Trig], Fraction] = {}
        for t in self.terms:
            if not isinstance(t, ClosedTerm):
                t = ClosedTerm(Fraction(t[0]), int(t[1]), Trig(t[2]))
            key = (t.power, Trig(t.trig))
            merged[key] = merged.get(key, Fraction(0)) + Fraction(t.coef)
        terms = tuple(
            ClosedTerm(c, p, tr)
            for (p, tr), c in sorted(merged.items(), key=lambda kv: (-kv[0][0], _TRIG_RANK[kv[0][1]]))
            if c != 0
        )
        object.__setattr__(self, "terms", terms)

    @classmethod
    def of(cls, *terms) -> ClosedFormExpression:
        return cls(tuple(terms))

    def __iter__(self) -> Iterator[ClosedTerm]:
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def scaled(self, factor) -> ClosedFormExpression:
        return ClosedFormExpression(
            tuple(ClosedTerm(t.coef * factor, t.power, t.trig) for t in self.terms)
        )

    def shifted(self, m: int) -> ClosedFormExpression:
        """Multiply by ``y**m`` (``m`` may be negative)."""
        return ClosedFormExpression(
            tuple(ClosedTerm(t.coef, t.power + m, t.trig) for t in self.terms)
        )

    def min_power(self) -> int:
        return min((t.power for t in self.terms), default=0)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for t in self.terms:
            factor = {Trig.NONE: "", Trig.SIN: "*sin(y)", Trig.COS: "*cos(y)"}[t.trig]
            parts.append(f"({render(t.coef)})*y^{t.power}{factor}")
        return " + ".join(parts)


def direct_series(spec: GoddardSpec, order: int) -> TruncatedSeries:
    """Partial sum of the defining series keeping every term of degree <= order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    values = [Fraction(0)] * (order + 1)
    n = 1
    while True:
        coef, power = spec.term(n)
        if power > order:
            break
        values[power] += coef
        n += 1
    return TruncatedSeries(order, tuple(values))


def _closed_form_S(k: int) -> ClosedFormExpression:
    if k == 0:
        return ClosedFormExpression.of(ClosedTerm(Fraction(1), 1), ClosedTerm(Fraction(-1), 0, Trig.SIN))
    if k == 1:
        return ClosedFormExpression.of(ClosedTerm(Fraction(1), 1), ClosedTerm(Fraction(-1), 1, Trig.COS))
    if k % 2 == 0:
        sign, trig = (-1) ** ((k + 2) // 2), Trig.SIN
    else:
        sign, trig = (-1) ** ((k + 1) // 2), Trig.COS
    return ClosedFormExpression.of(ClosedTerm(Fraction(sign, factorial(k)), k, trig))


def closed_form(spec: GoddardSpec) -> ClosedFormExpression:
    j, m = spec.parent()
    return _closed_form_S(j).shifted(-m)


def beta(k: int) -> ClosedFormExpression:
    """k! * S_k: the per-x^k/k! coefficient of the bivariate generating function."""
    return _closed_form_S(k).scaled(factorial(k))


def _trig_series(trig: Trig, order: int) -> TruncatedSeries:
    if trig is Trig.SIN:
        return elementary_sin(order)
    if trig is Trig.COS:
        return elementary_cos(order)
    return TruncatedSeries.constant(1, order)


def closed_to_series(expr: ClosedFormExpression, order: int) -> TruncatedSeries:
    """Exact Taylor expansion of a closed form up to ``y**order``.

    Negative powers are handled by expanding ``y**m * expr`` at order
    ``order + m`` and dividing by ``y**m`` afterwards.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    lift = max(0, -expr.min_power())
    work = order + lift
    acc = TruncatedSeries.zero(work)
    trig_cache: dict[Trig, TruncatedSeries] = {}
    for t in expr:
        if t.trig not in trig_cache:
            trig_cache[t.trig] = _trig_series(t.trig, work)
        acc = series_add(acc, trig_cache[t.trig].shift_mul(t.power + lift).scale(t.coef))
    try:
        return series_shift_div(acc, lift)
    except NonzeroLowOrder as exc:
        raise NegativePowerResidue(f"{expr} has a pole at y = 0") from exc


@dataclass(frozen=True)
class Mismatch:
    power: int
    direct_coef: Fraction
    closed_coef: Fraction


@dataclass(frozen=True)
class KCheck:
    family: Family
    k: int
    match: bool
    first_mismatch: Optional[Mismatch] = None

    def to_json(self) -> dict:
        mm = None
        if self.first_mismatch is not None:
            mm = {
                "power": self.first_mismatch.power,
                "direct": render(self.first_mismatch.direct_coef),
                "closed": render(self.first_mismatch.closed_coef),
            }
        return {"family": self.family.value, "k": self.k, "match": self.match, "first_mismatch": mm}


@dataclass(frozen=True)
class VerificationReport:
    k_max: int
    order: int
    per_k: tuple[KCheck, ...] = field(default_factory=tuple)

    @property
    def all_match(self) -> bool:
        return all(c.match for c in self.per_k)

    def to_json(self) -> dict:
        return {
            "k_max": self.k_max,
            "order": self.order,
            "all_match": self.all_match,
            "per_k": [c.to_json() for c in self.per_k],
        }


def compare(direct: TruncatedSeries, closed: TruncatedSeries) -> Optional[Mismatch]:
    """Lowest power where the two series differ, or None."""
    for power, (d, c) in enumerate(zip(direct.coeffs, closed.coeffs)):
        if d != c:
            return Mismatch(power, d, c)
    return None


def check_one(
    spec: GoddardSpec,
    order: int,
    closed: Callable[[GoddardSpec], ClosedFormExpression] = closed_form,
) -> KCheck:
    mm = compare(direct_series(spec, order), closed_to_series(closed(spec), order))
    return KCheck(spec.family, spec.k, mm is None, mm)


def verify_theorem(
    k_max: int,
    order: int,
    closed: Callable[[GoddardSpec], ClosedFormExpression] = closed_form,
) -> VerificationReport:
    """Compare direct expansion with closed-form expansion for every family and k <= k_max.

    ``closed`` can be swapped to check a tampered table of closed forms.
    Entries are ordered S, A, B, then by k.
    """
    if k_max < 0 or order < 0:
        raise ValueError("k_max and order must be nonnegative")
    checks = tuple(
        check_one(GoddardSpec(fam, k), order, closed)
        for fam in Family
        for k in range(k_max + 1)
    )
    return VerificationReport(k_max, order, checks)


def _linear_rows(x_order: int, y_order: int) -> list[TruncatedSeries]:
    # the xy + y part of S(x, y)
    y = TruncatedSeries.monomial(1, 1, y_order)
    zero = TruncatedSeries.zero(y_order)
    return [y if k <= 1 else zero for k in range(x_order + 1)]


def _bivariate_direct(x_order: int, y_order: int) -> list[TruncatedSeries]:
    return [direct_series(GoddardSpec(Family.S, k), y_order) for k in range(x_order + 1)]


def _bivariate_closed(x_order: int, y_order: int) -> list[TruncatedSeries]:
    # sin((1+x)y) = sum_m sin_m (1+x)^m y^m; (1+x)^m is built by repeated
    # multiplication with (1+x), truncated at x_order.
    sin = elementary_sin(y_order)
    table = [[Fraction(0)] * (y_order + 1) for _ in range(x_order + 1)]
    poly = [1] + [0] * x_order
    for m in range(y_order + 1):
        if m:
            poly = [poly[0]] + [poly[i] + poly[i - 1] for i in range(1, x_order + 1)]
        if sin[m]:
            for k in range(x_order + 1):
                table[k][m] = sin[m] * poly[k]
    rows = _linear_rows(x_order, y_order)
    return [r - TruncatedSeries(y_order, tuple(t)) for r, t in zip(rows, table)]


def _bivariate_angle(x_order: int, y_order: int) -> list[TruncatedSeries]:
    # sin(xy + y) = sin(xy) cos y + cos(xy) sin y, collecting x^k
    sin, cos = elementary_sin(y_order), elementary_cos(y_order)
    rows = []
    for k, lin in enumerate(_linear_rows(x_order, y_order)):
        if k % 2:
            # [x^k] sin(xy) = (-1)^((k-1)/2) y^k / k!
            mono = TruncatedSeries.monomial(Fraction((-1) ** ((k - 1) // 2), factorial(k)), k, y_order)
            other = cos
        else:
            # [x^k] cos(xy) = (-1)^(k/2) y^k / k!
            mono = TruncatedSeries.monomial(Fraction((-1) ** (k // 2), factorial(k)), k, y_order)
            other = sin
        rows.append(lin - series_mul(mono, other))
    return rows


_BIVARIATE_METHODS = {
    "direct": _bivariate_direct,
    "closed": _bivariate_closed,
    "angle": _bivariate_angle,
}


def bivariate_S(method: str, x_order: int, y_order: int) -> BivariateTruncatedSeries:
    """S(x, y) = sum_k S_k(y) x^k built one of three independent ways.

    ``direct`` stacks the defining series, ``closed`` expands
    ``xy + y - sin((1+x)y)``, ``angle`` uses the angle-addition split.
    """
    try:
        build = _BIVARIATE_METHODS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; expected one of {sorted(_BIVARIATE_METHODS)}") from None
    if x_order < 0 or y_order < 0:
        raise ValueError("orders must be nonnegative")
    return BivariateTruncatedSeries(x_order, y_order, tuple(build(x_order, y_order)))


def bivariate_agreement(x_order: int, y_order: int) -> bool:
    built = [bivariate_S(m, x_order, y_order) for m in _BIVARIATE_METHODS]
    return all(b == built[0] for b in built[1:])

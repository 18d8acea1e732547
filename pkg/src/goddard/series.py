"""Truncated formal power series over the rationals.

A series of order ``N`` stores the coefficients of ``y**0 .. y**N`` and every
operation works in the quotient ring Q[y] / (y**(N+1)). Mixing orders is an
error rather than an implicit truncation.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from goddard.errors import NonzeroConstantTerm, NonzeroLowOrder, OrderMismatch
from goddard.exact import factorial, render

_ZERO = Fraction(0)


@dataclass(frozen=True)
class TruncatedSeries:
    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != self.order + 1:
            raise ValueError(
                f"expected {self.order + 1} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, order: int | None = None) -> TruncatedSeries:
        """Build from a coefficient list, zero-padding or truncating to ``order``."""
        values = [Fraction(c) for c in coeffs]
        if order is None:
            order = max(len(values) - 1, 0)
        values = values[: order + 1]
        values += [_ZERO] * (order + 1 - len(values))
        return cls(order, tuple(values))

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls(order, (_ZERO,) * (order + 1))

    @classmethod
    def constant(cls, value, order: int) -> TruncatedSeries:
        return cls.from_coeffs([value], order)

    @classmethod
    def monomial(cls, coef, power: int, order: int) -> TruncatedSeries:
        """``coef * y**power``; vanishes when ``power > order``."""
        if power < 0:
            raise ValueError("monomial power must be nonnegative")
        values = [_ZERO] * (order + 1)
        if power <= order:
            values[power] = Fraction(coef)
        return cls(order, tuple(values))

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return series_add(self, other)

    def __neg__(self):
        return TruncatedSeries(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return series_add(self, -other)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, factor) -> TruncatedSeries:
        factor = Fraction(factor)
        return TruncatedSeries(self.order, tuple(factor * c for c in self.coeffs))

    def shift_mul(self, m: int) -> TruncatedSeries:
        """Multiply by ``y**m``, keeping the order (high terms fall off)."""
        if m < 0:
            raise ValueError("shift must be nonnegative")
        return TruncatedSeries.from_coeffs([_ZERO] * m + list(self.coeffs), self.order)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise OrderMismatch(f"cannot raise order {self.order} to {order}")
        return TruncatedSeries(order, self.coeffs[: order + 1])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def rendered(self) -> list[str]:
        return [render(c) for c in self.coeffs]

    def __call__(self, y: float) -> float:
        return series_eval_float(self, y)


def _check_orders(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.order != b.order:
        raise OrderMismatch(f"orders differ: {a.order} vs {b.order}")


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_orders(a, b)
    return TruncatedSeries(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated back to the common order."""
    _check_orders(a, b)
    n = a.order
    # skip zero entries; sin/cos and the Goddard series are half zeros
    nz_a = [(i, c) for i, c in enumerate(a.coeffs) if c]
    nz_b = [(j, c) for j, c in enumerate(b.coeffs) if c]
    out = [_ZERO] * (n + 1)
    for i, ca in nz_a:
        for j, cb in nz_b:
            if i + j > n:
                break
            out[i + j] += ca * cb
    return TruncatedSeries(n, tuple(out))


def series_compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """``outer(inner(y))`` by Horner's scheme; ``inner`` must have no constant term."""
    _check_orders(outer, inner)
    if inner.coeffs[0] != 0:
        raise NonzeroConstantTerm(f"inner constant term is {inner.coeffs[0]}")
    n = outer.order
    acc = TruncatedSeries.constant(outer.coeffs[n], n)
    for c in reversed(outer.coeffs[:n]):
        acc = series_mul(acc, inner)
        acc = TruncatedSeries(n, (acc.coeffs[0] + c,) + acc.coeffs[1:])
    return acc


def series_shift_div(s: TruncatedSeries, m: int) -> TruncatedSeries:
    """Divide by ``y**m``; the result has order ``s.order - m``."""
    if m < 0 or m > s.order:
        raise ValueError(f"shift {m} outside 0..{s.order}")
    for i in range(m):
        if s.coeffs[i] != 0:
            raise NonzeroLowOrder(
                f"coefficient of y^{i} is {render(s.coeffs[i])}; cannot divide by y^{m}"
            )
    return TruncatedSeries(s.order - m, s.coeffs[m:])


def _taylor(order: int, start: int) -> TruncatedSeries:
    # start=1 gives sin, start=0 gives cos
    values = [_ZERO] * (order + 1)
    for j, p in enumerate(range(start, order + 1, 2)):
        values[p] = Fraction((-1) ** j, factorial(p))
    return TruncatedSeries(order, tuple(values))


def elementary_sin(order: int) -> TruncatedSeries:
    return _taylor(order, 1)


def elementary_cos(order: int) -> TruncatedSeries:
    return _taylor(order, 0)


def series_eval_float(s: TruncatedSeries, y: float) -> float:
    acc = 0.0
    for c in reversed(s.coeffs):
        acc = acc * y + float(c)
    return acc


@dataclass(frozen=True)
class BivariateTruncatedSeries:
    """Series in x whose coefficients are ``TruncatedSeries`` in y.

    ``rows[k]`` is the coefficient series of ``x**k``.
    """

    x_order: int
    y_order: int
    rows: tuple[TruncatedSeries, ...]

    def __post_init__(self):
        rows = tuple(self.rows)
        if len(rows) != self.x_order + 1:
            raise ValueError(f"expected {self.x_order + 1} rows, got {len(rows)}")
        for row in rows:
            if row.order != self.y_order:
                raise OrderMismatch(f"row order {row.order} != y_order {self.y_order}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[TruncatedSeries]) -> BivariateTruncatedSeries:
        if not rows:
            raise ValueError("need at least one row")
        return cls(len(rows) - 1, rows[0].order, tuple(rows))

    def __getitem__(self, k: int) -> TruncatedSeries:
        return self.rows[k]

    def coefficient(self, k: int, power: int) -> Fraction:
        return self.rows[k].coeffs[power]

import math

import pytest

from goddard import (
    Family,
    GoddardSpec,
    NumericSample,
    UsageError,
    eval_closed,
    eval_partial,
    sample_grid,
    tail_bound,
)
from goddard.numeric import NEAR_ZERO, term_value

S, A, B = Family.S, Family.A, Family.B
EPS = 2.0**-53


def spec(f, k):
    return GoddardSpec(f, k)


class TestEvalPartial:
    def test_zero_point(self):
        assert eval_partial(spec(S, 0), 0.0, 10) == 0.0

    def test_S1_at_pi(self):
        # pi - pi cos pi = 2 pi
        assert abs(eval_partial(spec(S, 1), math.pi, 30) - 6.283185307) < 1e-8

    def test_B0_at_zero(self):
        assert eval_partial(spec(B, 0), 0.0, 5) == 0.5

    def test_single_term(self):
        # n = 1 of S_0 is y^3/3!
        assert eval_partial(spec(S, 0), 2.0, 1) == pytest.approx(8 / 6, rel=1e-15)

    def test_overflow_is_reported_as_inf(self):
        value = eval_partial(spec(S, 0), 1e200, 3)
        assert math.isinf(value) or math.isnan(value)

    def test_rejects_zero_terms(self):
        with pytest.raises(UsageError):
            eval_partial(spec(S, 0), 1.0, 0)


class TestEvalClosed:
    def test_S0(self):
        assert abs(eval_closed(spec(S, 0), math.pi / 2) - 0.570796327) < 1e-9

    def test_removable_points(self):
        assert eval_closed(spec(A, 0), 0.0) == 0.0
        assert eval_closed(spec(B, 0), 0.0) == 0.5

    def test_near_zero_continuity(self):
        assert abs(eval_closed(spec(B, 0), 1e-6) - 0.5) < 1e-6

    @pytest.mark.parametrize("family", [A, B])
    @pytest.mark.parametrize("k", [0, 1, 3])
    def test_threshold_seam(self, family, k):
        # both sides of the fallback threshold describe the same function
        below = eval_closed(spec(family, k), NEAR_ZERO * (1 - 1e-9))
        above = eval_closed(spec(family, k), NEAR_ZERO)
        assert below == pytest.approx(above, rel=1e-9, abs=1e-15)

    @pytest.mark.parametrize("k", range(9))
    @pytest.mark.parametrize("y", [0.3, 1.7])
    def test_symmetry(self, k, y):
        s_pos, s_neg = eval_closed(spec(S, k), y), eval_closed(spec(S, k), -y)
        assert abs(s_neg + s_pos) <= 1e-12 * abs(s_pos)
        b_pos, b_neg = eval_closed(spec(B, k), y), eval_closed(spec(B, k), -y)
        assert abs(b_neg - b_pos) <= 1e-12 * abs(b_pos)


class TestTailBound:
    def test_first_omitted_term(self):
        bound, valid = tail_bound(spec(S, 0), 1.0, 3)
        assert bound == pytest.approx(1 / math.factorial(9), rel=1e-15)
        assert abs(bound - 2.7557e-6) < 1e-9
        assert valid

    def test_zero_point(self):
        assert tail_bound(spec(S, 0), 0.0, 3) == (0.0, True)

    def test_terms_still_growing(self):
        mags = [abs(term_value(spec(S, 0), n, 50.0)) for n in range(3, 9)]
        assert mags == sorted(mags)
        assert tail_bound(spec(S, 0), 50.0, 3)[1] is False


class TestGrid:
    def test_degenerate_interval(self):
        rows = sample_grid(spec(S, 0), 2.0, 2.0, 1, 10)
        assert [r.y for r in rows] == [2.0, 2.0]
        assert rows[0] == rows[1]

    def test_S2_on_unit_interval(self):
        rows = sample_grid(spec(S, 2), -1.0, 1.0, 2, 25)
        assert [r.y for r in rows] == [-1.0, 0.0, 1.0]
        for r in rows:
            assert r.abs_error <= r.tail_bound
            assert r.terms_used == 25
            assert r.abs_error == abs(r.partial_sum - r.closed_value)

    def test_endpoints_and_types(self):
        rows = sample_grid(spec(A, 1), -3, 1, 4, 12)
        assert [r.y for r in rows] == [-3.0, -2.0, -1.0, 0.0, 1.0]
        assert all(isinstance(r.y, float) for r in rows)

    @pytest.mark.parametrize("args", [(0.0, 1.0, 0), (1.0, 0.0, 3)])
    def test_usage_errors(self, args):
        with pytest.raises(UsageError):
            sample_grid(spec(S, 0), *args, 10)

    def test_json_fields(self):
        (row,) = sample_grid(spec(S, 0), 1.0, 1.0, 1, 5)[:1]
        assert list(row.to_json()) == [
            "y", "partial_sum", "closed_value", "abs_error", "tail_bound", "bound_valid", "terms_used"
        ]


Y_SET = [0.5, -0.5, 1.0, -1.0, 2.0, -2.0, 5.0, -5.0]


@pytest.mark.parametrize("family", list(Family))
@pytest.mark.parametrize("k", range(9))
def test_relative_agreement(family, k):
    for y in Y_SET:
        partial, closed = eval_partial(spec(family, k), y, 30), eval_closed(spec(family, k), y)
        assert abs(partial - closed) <= 1e-10 * (1 + abs(closed))


@pytest.mark.parametrize("family", list(Family))
@pytest.mark.parametrize("k", range(9))
def test_tail_bound_up_to_rounding(family, k):
    # Truncation error is below the first omitted term; the remaining gap is
    # bounded by a few ulps of the summed term magnitudes.
    for y in Y_SET:
        sp = spec(family, k)
        partial, closed = eval_partial(sp, y, 30), eval_closed(sp, y)
        bound, valid = tail_bound(sp, y, 30)
        if not valid:
            continue
        magnitude = math.fsum(abs(term_value(sp, n, y)) for n in range(1, 31)) + abs(closed)
        assert abs(partial - closed) <= bound + 4 * EPS * magnitude


@pytest.mark.parametrize("family", list(Family))
@pytest.mark.parametrize("k", [0, 1, 4, 8])
@pytest.mark.parametrize("y", [-2.0, -0.7, 0.0, 0.004, 1.3, 2.0])
def test_converged_partial_matches_closed(family, k, y):
    # start past the leading summands, which vanish identically for large k
    n = spec(family, k).parent()[0] // 2 + 1
    while tail_bound(spec(family, k), y, n)[0] >= 1e-15 or not tail_bound(spec(family, k), y, n)[1]:
        n += 1
    assert abs(eval_partial(spec(family, k), y, n) - eval_closed(spec(family, k), y)) <= 1e-12

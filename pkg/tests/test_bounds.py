from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from pydantic import ValidationError

from genus_core.errors import IdentityCheckError, InvalidInputError, RegimeError
from app.bounds import (
    ambient_range,
    asymptotic_coefficient,
    beta0_bound,
    castelnuovo_bound,
    clifford_h0_upper,
    coarse_bound,
    complete_intersection_genus,
    envelope_constant,
    extremal_surface_h0,
    g0_bound,
    g0_value,
    g_candidates_r9,
    g_interval,
    g_sharp_r6,
    genus_expansion,
    projection_range,
    surface_sections_lower,
)
from app.params import binomial, surface_params
from app.threshold import d0_threshold
from app.schemas import BoundResult, Regime, SectionData, Sharpness


class TestCastelnuovo:

    @pytest.mark.parametrize("r, d, expected", [(3, 3, 0), (3, 4, 1), (10, 27, 25)])
    def test_examples(self, r, d, expected):
        assert castelnuovo_bound(r, d) == expected

    def test_rejects_small_r(self):
        with pytest.raises(InvalidInputError):
            castelnuovo_bound(2, 5)


class TestG0Bound:

    def test_quadrics_in_p6(self):
        result = g0_bound(6, 27, 2)
        assert result.value == 28
        assert result.regime is Regime.G0
        assert result.valid_for_theorem
        assert not result.d0_met
        assert result.sharp is Sharpness.NOT_KNOWN_SHARP
        assert result.threshold_d0 > 10**7

    def test_max_term_vanishes(self):
        assert g0_bound(6, 28, 2).value == 30

    def test_r4_exception_is_flagged(self):
        result = g0_bound(4, 100, 3)
        assert result.value == 786
        assert result.valid_for_theorem is False

    @pytest.mark.parametrize("i", [4, 6, 16])
    def test_r4_regular_cases(self, i):
        assert g0_bound(4, 1000, i).valid_for_theorem

    def test_beta_zero_routes_to_beta0(self):
        with pytest.raises(RegimeError) as exc_info:
            g0_bound(4, 13, 2)
        assert exc_info.value.context["use"] == "beta0_bound"

    def test_degree_must_exceed_s0(self):
        with pytest.raises(InvalidInputError):
            g0_bound(6, 9, 2)

    @settings(max_examples=100, deadline=None)
    @given(
        r=st.integers(min_value=4, max_value=20),
        i=st.integers(min_value=2, max_value=5),
        offset=st.integers(min_value=1, max_value=2000),
    )
    def test_non_negative_and_monotone(self, r, i, offset):
        params = surface_params(r, i)
        if params.beta == 0:
            return
        d = params.s0 + offset
        assert g0_value(params, d) >= 0
        assert g0_value(params, d + 1) >= g0_value(params, d)


class TestBeta0Bound:

    def test_quadrics_in_p4(self):
        result = beta0_bound(4, 13, 2)
        assert result.value == 12 == castelnuovo_bound(5, 13)
        assert result.regime is Regime.BETA_ZERO
        assert result.valid_for_theorem is False

    def test_first_degree(self):
        s0 = surface_params(5, 2).s0
        assert beta0_bound(5, s0 + 1, 2).value == 0

    def test_positive_beta_routes_to_g0(self):
        with pytest.raises(RegimeError) as exc_info:
            beta0_bound(6, 27, 2)
        assert exc_info.value.context["use"] == "g0_bound"

    def test_sharp_for_quadrics_past_threshold(self):
        result = beta0_bound(5, d0_threshold(5, 2) + 1, 2)
        assert result.d0_met
        assert result.sharp is Sharpness.SHARP

    @pytest.mark.parametrize("r, i", [(5, 7), (8, 4), (4, 2)])
    def test_sharpness_unknown_outside_settled_range(self, r, i):
        result = beta0_bound(r, d0_threshold(r, i) + 1, i)
        assert result.d0_met
        assert result.sharp is Sharpness.NOT_KNOWN_SHARP
        assert result.valid_for_theorem == (r >= 5)


class TestSections:

    @pytest.mark.parametrize(
        "s, pi, j, expected", [(9, 1, 1, 9), (4, 0, 3, 13), (2, 5, 1, 2)]
    )
    def test_clifford(self, s, pi, j, expected):
        assert clifford_h0_upper(SectionData(s=s, pi=pi, j=j)) == expected

    @given(s=st.integers(1, 200), j=st.integers(1, 20))
    def test_clifford_rational_surface(self, s, j):
        assert clifford_h0_upper(SectionData(s=s, pi=0, j=j)) == 1 + j * s

    def test_suff_example(self):
        assert surface_sections_lower(4, 3, 0, 2) == 3

    def test_suff_at_s0(self):
        params = surface_params(4, 4)
        assert surface_sections_lower(4, params.s0, 0, 4) == params.beta - binomial(5, 2) == -5

    def test_suff_above_c0(self):
        params = surface_params(6, 2)
        assert surface_sections_lower(6, params.s0, params.c0 + 1, 2) == 2 - params.gamma


class TestRanges:

    def test_projection_range(self):
        assert projection_range(6, 2, 1) == (10, 10)
        assert projection_range(4, 4, 1) == (7, 8)

    def test_projection_range_rejects_large_genus(self):
        with pytest.raises(InvalidInputError):
            projection_range(6, 2, 2)

    def test_ambient_range(self):
        assert ambient_range(6, 2) == (9, 9)
        assert ambient_range(4, 4) == (6, 7)


class TestQuadricTheorems:

    @pytest.mark.parametrize("d, expected", [(27, 28), (21, 15)])
    def test_r6_sharp(self, d, expected):
        result = g_sharp_r6(d)
        assert result.value == expected
        assert result.regime is Regime.R6_SHARP
        assert result.sharp is Sharpness.SHARP

    def test_r6_agrees_with_g0(self):
        for d in range(12, 3000, 3):
            assert g_sharp_r6(d).value == g0_bound(6, d, 2).value

    def test_r6_routes_to_interval(self):
        with pytest.raises(RegimeError) as exc_info:
            g_sharp_r6(28)
        assert exc_info.value.context["use"] == "g_interval"

    def test_r6_strict_refuses_small_degree(self):
        with pytest.raises(InvalidInputError):
            g_sharp_r6(27, strict=True)

    def test_r9_candidates(self):
        assert g_candidates_r9(9, 198) == [980, 981, 982, 991]

    def test_r9_spread(self):
        for r in (9, 12, 15):
            s0 = surface_params(r, 2).s0
            for m in (1, 5, 40):
                candidates = g_candidates_r9(r, (m + 1) * s0)
                assert candidates[3] - candidates[0] == m + 1
                assert candidates == sorted(candidates)

    def test_r9_routes_to_interval(self):
        with pytest.raises(RegimeError) as exc_info:
            g_candidates_r9(9, 200)
        assert exc_info.value.context["use"] == "g_interval"

    def test_interval(self):
        assert g_interval(6, 28) == (27, 30)

    def test_interval_routes_to_candidates(self):
        with pytest.raises(RegimeError) as exc_info:
            g_interval(9, 198)
        assert exc_info.value.context["use"] == "g_candidates_r9"

    def test_interval_routes_r6_to_sharp_value(self):
        with pytest.raises(RegimeError) as exc_info:
            g_interval(6, 27)
        assert exc_info.value.context["use"] == "g_sharp_r6"
        assert g_sharp_r6(27).value == 28

    def test_interval_needs_multiple_of_three(self):
        with pytest.raises(RegimeError):
            g_interval(7, 50)


class TestAsymptotics:

    @pytest.mark.parametrize(
        "r, i, expected",
        [(6, 2, Fraction(1, 18)), (4, 2, Fraction(1, 8)), (9, 2, Fraction(1, 36))],
    )
    def test_coefficient(self, r, i, expected):
        assert asymptotic_coefficient(r, i) == expected

    def test_coefficient_closed_forms(self):
        for r in range(4, 100):
            asymptotic_coefficient(r, 2)

    @settings(max_examples=200, deadline=None)
    @given(
        s0=st.integers(1, 500),
        d=st.integers(1, 100_000),
        pi=st.integers(0, 50),
    )
    def test_genus_expansion_is_exact(self, s0, d, pi):
        m, epsilon = divmod(d - 1, s0)
        assert genus_expansion(s0, d, pi) == binomial(m, 2) * s0 + m * (epsilon + pi)

    def test_envelope_constant_bounds_g0(self):
        for r, i in ((6, 2), (4, 4), (7, 3)):
            params = surface_params(r, i)
            constant = envelope_constant(r, i)
            for d in range(params.s0 + 1, 3000):
                gap = Fraction(g0_value(params, d)) - Fraction(d * d, 2 * params.s0)
                assert abs(gap) <= constant * d


class TestComparisons:

    def test_coarse_bound(self):
        # pi* = G(5; 9) = 4
        assert coarse_bound(6, 27, 2) == 9 + 2 * (8 + 4)

    def test_complete_intersection(self):
        assert complete_intersection_genus(6, 27, 2) == 28 == g0_bound(6, 27, 2).value

    def test_complete_intersection_needs_last_residue(self):
        with pytest.raises(RegimeError):
            complete_intersection_genus(6, 28, 2)

    def test_extremal_surface_h0(self):
        assert extremal_surface_h0(4, 3) == 34
        assert extremal_surface_h0(6, 2) == 28


def test_r6_sharp_result_must_be_sharp():
    with pytest.raises(ValidationError):
        BoundResult(r=6, d=27, i=2, value=28, regime=Regime.R6_SHARP, sharp=Sharpness.NOT_KNOWN_SHARP)


def test_identity_error_exit_status():
    assert IdentityCheckError.exit_status == 1


@pytest.mark.parametrize(
    "operation, args",
    [
        (projection_range, (4, 2, 0)),
        (ambient_range, (5, 2)),
        (envelope_constant, (4, 2)),
        (coarse_bound, (5, 20, 2)),
        (complete_intersection_genus, (5, 20, 2)),
    ],
)
def test_positive_beta_operations_reject_beta_zero(operation, args):
    with pytest.raises(InvalidInputError) as exc_info:
        operation(*args)
    assert not isinstance(exc_info.value, RegimeError)
    assert "use" not in exc_info.value.context

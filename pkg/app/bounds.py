"""
Genus Bounds Calculator - Bound Computations

Every genus and section bound of the calculator, computed exactly.

📐 Main bounds:
    - ``castelnuovo_bound``   classical bound G(r; d) for non-degenerate curves
    - ``g0_bound``            G0(r; d, i) for beta(r, i) > 0
    - ``beta0_bound``         the bound for beta(r, i) = 0, equal to G(s0+1; d)
    - ``g_sharp_r6``          exact value of G(6; d, 2) for 3 | d
    - ``g_candidates_r9``     the four possible values when 3 | r and epsilon = s0 - 1
    - ``g_interval``          G0 - m <= G <= G0 for the remaining residues

🧮 Auxiliary quantities:
    - ``clifford_h0_upper`` and ``surface_sections_lower`` bound sections of
      twists of a surface
    - ``projection_range`` and ``ambient_range`` locate the surface a
      degree-s0 surface is projected from
    - ``asymptotic_coefficient``, ``genus_expansion`` and
      ``envelope_constant`` describe the d^2/(2 s0) growth of G0
    - ``coarse_bound``, ``complete_intersection_genus`` and
      ``extremal_surface_h0`` compare G0 with older or limiting values

Routing between the sharp, candidate and interval statements is explicit:
calling one outside its hypotheses raises ``RegimeError`` naming the
operation to use instead. Values are computed below d0(r, i) too; the result
records whether the threshold is met and ``strict=True`` refuses such inputs.

The ``*_value`` helpers return bare integers for the sweeps and skip input
validation; the public functions validate and wrap.
"""

from fractions import Fraction
from math import comb
from typing import List, Optional, Tuple

from genus_core.errors import (
    raise_identity_error,
    raise_regime_error,
    raise_validation_error,
    require,
)
from genus_core.utils.logging import get_logger

from .config import CalculatorConfig, load_config
from .params import SurfaceParams, degree_split, surface_params
from .schemas import BoundResult, Regime, SectionData, Sharpness
from .threshold import maybe_d0_threshold, threshold_met

logger = get_logger(__name__)

R4_EXCEPTIONS = frozenset({2, 3, 15})


def castelnuovo_value(r: int, d: int) -> int:
    m1, e1 = divmod(d - 1, r - 1)
    return comb(m1, 2) * (r - 1) + m1 * e1


def max_branch_term(s0: int, c0: int, epsilon: int) -> int:
    # floor division rounds toward -inf, the branch may be negative
    return max(0, (2 * c0 - (s0 - 1 - epsilon)) // 2)


def g0_value(params: SurfaceParams, d: int) -> int:
    s0, c0, gamma = params.s0, params.c0, params.gamma
    m, epsilon = divmod(d - 1, s0)
    return (
        comb(m, 2) * s0
        + m * (epsilon + c0)
        + comb(gamma + 1, 2)
        + max_branch_term(s0, c0, epsilon)
        - params.mu
    )


def beta0_value(params: SurfaceParams, d: int) -> int:
    m, epsilon = divmod(d - 1, params.s0)
    return comb(m, 2) * params.s0 + m * epsilon


def leading_part(s0: int, d: int, pi: int) -> int:
    """binom(m, 2) s0 + m (epsilon + pi)."""
    m, epsilon = divmod(d - 1, s0)
    return comb(m, 2) * s0 + m * (epsilon + pi)


def envelope_holds(params: SurfaceParams, d: int, value: int) -> Tuple[bool, int]:
    """
    Integer form of |G0 - d^2/(2 s0)| <= C d with C from ``envelope_constant``.
    Returns the verdict and the slack of the scaled inequality.
    """
    s0, c0, gamma = params.s0, params.c0, params.gamma
    lhs = abs(2 * s0 * value - d * d) * (s0 + 1)
    rhs = d * (
        (abs(2 * c0 - 2 - s0) + s0) * (s0 + 1) + 2 * s0 * (comb(gamma + 1, 2) + c0 + 1)
    )
    return lhs <= rhs, rhs - lhs


def theorem_applies(r: int, i: int) -> bool:
    return not (r == 4 and (i < 4 or i in R4_EXCEPTIONS))


def _positive_beta(r: int, i: int, use: Optional[str] = None) -> SurfaceParams:
    params = surface_params(r, i)
    if params.beta == 0:
        if use:
            raise_regime_error(f"beta({r}, {i}) = 0", use=use, r=r, i=i)
        raise_validation_error(f"beta({r}, {i}) must be positive", field="i", value=i)
    return params


def _require_degree(params: SurfaceParams, d: int) -> None:
    require(
        d >= params.s0 + 1,
        f"d must be at least s0 + 1 = {params.s0 + 1}",
        field="d",
        value=d,
    )


def _require_threshold(r: int, i: int, d: int, met: bool) -> None:
    if not met:
        raise_validation_error(f"d must exceed d0({r}, {i})", field="d", value=d)


def castelnuovo_bound(r: int, d: int) -> int:
    """
    Classical maximal genus G(r; d): with d - 1 = m1 (r-1) + e1,
    returns binom(m1, 2)(r-1) + m1 e1.
    """
    require(r >= 3, "r must be at least 3", field="r", value=r)
    require(d >= 1, "d must be at least 1", field="d", value=d)
    return castelnuovo_value(r, d)


def g0_bound(r: int, d: int, i: int, config: Optional[CalculatorConfig] = None) -> BoundResult:
    """
    G0(r; d, i) = binom(m, 2) s0 + m(epsilon + c0) + binom(gamma+1, 2)
                  + max{0, floor((2 c0 - (s0 - 1 - epsilon)) / 2)} - mu

    Requires beta(r, i) > 0 and d >= s0 + 1. For r = 4 and i in {2, 3, 15}
    the value is returned with ``valid_for_theorem=False``. For r = 6, i = 2
    and 3 | d the bound is exact once d > d0.
    """
    config = config or load_config()
    params = _positive_beta(r, i, use="beta0_bound")
    _require_degree(params, d)

    valid = theorem_applies(r, i)
    if not valid:
        logger.warning(f"G0({r}; {d}, {i}) is outside the range of the bound theorem")

    met = threshold_met(r, i, d, config)
    _, epsilon = degree_split(params.s0, d)
    sharp = Sharpness.NOT_KNOWN_SHARP
    if r == 6 and i == 2 and epsilon in (2, 5, 8) and met:
        sharp = Sharpness.SHARP

    return BoundResult(
        r=r,
        d=d,
        i=i,
        value=g0_value(params, d),
        regime=Regime.G0,
        sharp=sharp,
        valid_for_theorem=valid,
        threshold_d0=maybe_d0_threshold(r, i, config),
        d0_met=met,
    )


def beta0_bound(r: int, d: int, i: int, config: Optional[CalculatorConfig] = None) -> BoundResult:
    """
    binom(m, 2) s0 + m epsilon for beta(r, i) = 0, checked against
    castelnuovo_bound(s0 + 1, d). Known sharp beyond d0 only for r >= 5 and
    i <= 3.
    """
    config = config or load_config()
    params = surface_params(r, i)
    if params.beta > 0:
        raise_regime_error(f"beta({r}, {i}) > 0", use="g0_bound", r=r, i=i)
    _require_degree(params, d)

    value = beta0_value(params, d)
    classical = castelnuovo_value(params.s0 + 1, d)
    if value != classical:
        raise_identity_error(
            "beta0_equals_castelnuovo", classical, value, {"r": r, "d": d, "i": i}
        )

    met = threshold_met(r, i, d, config)
    return BoundResult(
        r=r,
        d=d,
        i=i,
        value=value,
        regime=Regime.BETA_ZERO,
        sharp=Sharpness.SHARP if met and r >= 5 and i <= 3 else Sharpness.NOT_KNOWN_SHARP,
        valid_for_theorem=r >= 5,
        threshold_d0=maybe_d0_threshold(r, i, config),
        d0_met=met,
    )


def clifford_h0_upper(sec: SectionData) -> int:
    """1 + j s - min{pi, ceil(j s / 2)}."""
    js = sec.j * sec.s
    return 1 + js - min(sec.pi, -(-js // 2))


def surface_sections_lower(r: int, s: int, pi: int, i: int) -> int:
    """
    binom(r+i, i) - [(i+1) + binom(i+1, 2) s] + sum_{j=1..i} min{pi, ceil(j s / 2)}.
    May be negative.
    """
    require(r >= 2, "r must be at least 2", field="r", value=r)
    require(s >= 1, "s must be at least 1", field="s", value=s)
    require(pi >= 0, "pi must be non-negative", field="pi", value=pi)
    require(i >= 1, "i must be at least 1", field="i", value=i)
    corrections = sum(min(pi, -(-(j * s) // 2)) for j in range(1, i + 1)) if pi else 0
    return comb(r + i, i) - ((i + 1) + comb(i + 1, 2) * s) + corrections


def projection_range(r: int, i: int, pi: int) -> Tuple[int, int]:
    """Admissible range of h0(S, O_S(1)) for a degree-s0 surface of sectional genus pi."""
    params = _positive_beta(r, i)
    s0, c0, gamma = params.s0, params.c0, params.gamma
    require(pi >= 0, "pi must be non-negative", field="pi", value=pi)
    require(pi <= c0, f"pi must not exceed c0 = {c0}", field="pi", value=pi)
    return s0 - pi + 2 - i * (c0 - pi) - gamma, s0 - pi + 2


def ambient_range(r: int, i: int) -> Tuple[int, int]:
    """Range of R for the surface in P^R that a sectional genus c0 surface is projected from."""
    params = _positive_beta(r, i)
    return params.s0 - params.c0 + 1 - params.gamma, params.s0 - params.c0 + 1


def _r6_value(d: int) -> int:
    return comb(d // 3 - 1, 2)


def g_sharp_r6(
    d: int, strict: bool = False, config: Optional[CalculatorConfig] = None
) -> BoundResult:
    """
    G(6; d, 2) = binom(d/3 - 1, 2) for 3 | d, cross-checked against G0 and
    against 9 binom(m, 2) + m(epsilon + 1) + nu with nu = [epsilon = 8].
    """
    config = config or load_config()
    if d % 3:
        raise_regime_error(f"d = {d} is not divisible by 3", use="g_interval", d=d)
    params = surface_params(6, 2)
    _require_degree(params, d)
    met = threshold_met(6, 2, d, config)
    if strict:
        _require_threshold(6, 2, d, met)

    value = _r6_value(d)
    m, epsilon = degree_split(params.s0, d)
    closed = 9 * comb(m, 2) + m * (epsilon + 1) + (1 if epsilon == 8 else 0)
    for name, other in (("r6_equals_g0", g0_value(params, d)), ("r6_closed_form", closed)):
        if other != value:
            raise_identity_error(name, value, other, {"d": d})

    return BoundResult(
        r=6,
        d=d,
        i=2,
        value=value,
        regime=Regime.R6_SHARP,
        sharp=Sharpness.SHARP,
        threshold_d0=maybe_d0_threshold(6, 2, config),
        d0_met=met,
    )


def _quadric_case(r: int, d: int, r_min: int) -> Tuple[SurfaceParams, int, int]:
    require(r >= r_min, f"r must be at least {r_min}", field="r", value=r)
    if r % 3:
        raise_regime_error(f"r = {r} is not divisible by 3", use="g0_bound", r=r)
    params = surface_params(r, 2)
    _require_degree(params, d)
    m, epsilon = degree_split(params.s0, d)
    return params, m, epsilon


def g_candidates_r9(
    r: int, d: int, strict: bool = False, config: Optional[CalculatorConfig] = None
) -> List[int]:
    """The four possible values [G0-m-1, G0-m, G0-m+1, G0] when epsilon = s0 - 1."""
    params, m, epsilon = _quadric_case(r, d, 9)
    if epsilon != params.s0 - 1:
        raise_regime_error(f"epsilon = {epsilon} is not s0 - 1", use="g_interval", r=r, d=d)
    if strict:
        _require_threshold(r, 2, d, threshold_met(r, 2, d, config or load_config()))
    g0 = g0_value(params, d)
    return [g0 - m - 1, g0 - m, g0 - m + 1, g0]


def g_interval(
    r: int, d: int, strict: bool = False, config: Optional[CalculatorConfig] = None
) -> Tuple[int, int]:
    """(G0 - m, G0) for 3 | r and epsilon < s0 - 1."""
    params, m, epsilon = _quadric_case(r, d, 6)
    if epsilon == params.s0 - 1:
        raise_regime_error(
            f"epsilon = {epsilon} equals s0 - 1",
            use="g_sharp_r6" if r == 6 else "g_candidates_r9",
            r=r,
            d=d,
        )
    if strict:
        _require_threshold(r, 2, d, threshold_met(r, 2, d, config or load_config()))
    g0 = g0_value(params, d)
    return g0 - m, g0


def candidates_result(
    r: int, d: int, strict: bool = False, config: Optional[CalculatorConfig] = None
) -> BoundResult:
    config = config or load_config()
    candidates = g_candidates_r9(r, d, strict, config)
    return BoundResult(
        r=r,
        d=d,
        i=2,
        value=candidates[-1],
        regime=Regime.R9_CANDIDATES,
        sharp=Sharpness.CANDIDATE_SET,
        threshold_d0=maybe_d0_threshold(r, 2, config),
        d0_met=threshold_met(r, 2, d, config),
        candidates=candidates,
    )


def interval_result(
    r: int, d: int, strict: bool = False, config: Optional[CalculatorConfig] = None
) -> BoundResult:
    config = config or load_config()
    low, high = g_interval(r, d, strict, config)
    return BoundResult(
        r=r,
        d=d,
        i=2,
        value=high,
        regime=Regime.INTERVAL,
        threshold_d0=maybe_d0_threshold(r, 2, config),
        d0_met=threshold_met(r, 2, d, config),
        interval=(low, high),
    )


def asymptotic_coefficient(r: int, i: int) -> Fraction:
    """Leading coefficient 1/(2 s0) of G as d grows."""
    s0 = surface_params(r, i).s0
    coefficient = Fraction(1, 2 * s0)
    if i == 2:
        expected = Fraction(3, r * (r + 3)) if r % 3 == 0 else Fraction(3, (r - 1) * (r + 4))
        if coefficient != expected:
            raise_identity_error("quadric_coefficient", str(expected), str(coefficient), {"r": r})
    return coefficient


def genus_expansion(s0: int, d: int, pi: int) -> Fraction:
    """
    d^2/(2 s0) + d (2 pi - 2 - s0)/(2 s0) + (1 + epsilon)(s0 + 1 - epsilon - 2 pi)/(2 s0),
    which equals binom(m, 2) s0 + m (epsilon + pi).
    """
    require(s0 >= 1, "s0 must be positive", field="s0", value=s0)
    require(pi >= 0, "pi must be non-negative", field="pi", value=pi)
    _, epsilon = degree_split(s0, d)
    return (
        Fraction(d * d, 2 * s0)
        + Fraction(d * (2 * pi - 2 - s0), 2 * s0)
        + Fraction((1 + epsilon) * (s0 + 1 - epsilon - 2 * pi), 2 * s0)
    )


def envelope_constant(r: int, i: int) -> Fraction:
    """C with |G0(r; d, i) - d^2/(2 s0)| <= C d for every d >= s0 + 1."""
    params = _positive_beta(r, i)
    s0, c0, gamma = params.s0, params.c0, params.gamma
    return (
        abs(2 * c0 - 2 - s0)
        + s0
        + Fraction(2 * s0 * (comb(gamma + 1, 2) + c0 + 1), s0 + 1)
    ) / (2 * s0)


def coarse_bound(r: int, d: int, i: int) -> int:
    """binom(m, 2) s0 + m (epsilon + pi*) with pi* = G(r-1; s0)."""
    params = _positive_beta(r, i)
    _require_degree(params, d)
    return leading_part(params.s0, d, castelnuovo_value(r - 1, params.s0))


def complete_intersection_genus(r: int, d: int, i: int) -> int:
    """Genus binom(m, 2) s0 + m (epsilon + c0) + c0 of an extremal surface cut by a hypersurface."""
    params = _positive_beta(r, i)
    _require_degree(params, d)
    m, epsilon = degree_split(params.s0, d)
    if params.gamma != 0 or epsilon != params.s0 - 1:
        raise_regime_error(
            "complete intersections need gamma = 0 and epsilon = s0 - 1",
            use="g0_bound",
            r=r,
            d=d,
            i=i,
        )
    return comb(m, 2) * params.s0 + m * (epsilon + params.c0) + params.c0


def extremal_surface_h0(r: int, i: int) -> int:
    """h0(O_S(i)) forced on an extremal surface: binom(r+i, i) + gamma - binom(gamma+1, 2)."""
    params = surface_params(r, i)
    return comb(r + i, i) + params.gamma - comb(params.gamma + 1, 2)

"""
Genus Bounds Calculator - Verification Suites

Mechanical checks of every numerical claim the bounds rest on: inequalities
between the derived quantities, closed-form identities, the appendix case
analysis and its sufficiency polynomials.

🧪 Suites (``run_suite`` names):
    - ``stima``            2 c0 < s0 and the inequality chain behind it
    - ``appendix``         s0 >= 2(c0 + gamma + 1) for r >= 5, its expanded
                           form, the polynomials p and q, the r = 4 table
    - ``r6``               binom(d/3 - 1, 2) = d^2/18 - d/2 + 1 = G0(6; d, 2)
    - ``remark-r1``        section counts of surfaces of degree <= s0
    - ``curious``          beta = 0 bound equals G(s0 + 1; d)
    - ``max-branch``       max-term of G0 against a brute-force maximum
    - ``envelope``         |G0 - d^2/(2 s0)| <= C d and monotonicity in d
    - ``r9``               structure of the four-candidate list
    - ``genus-expansion``  exact expansion of binom(m, 2) s0 + m(epsilon + pi)
    - ``maximal-rank``     quadric data for 3 | r
    - ``residues``         residue classes of r for i = 3
    - ``intersection``     complete intersection genus equals G0
    - ``coarse``           c0 <= G(r - 1; s0)
    - ``mu``               mu = 1 exactly when h0(O_S(i)) drops

📋 Reports:
    Each suite returns a ``VerificationReport``. Cases where an inequality
    holds with margin 0 are recorded as witnesses, not failures. Failures and
    witnesses are sorted on (r, i, d) so reports are identical across runs and
    thread counts.

⚡ Grids:
    Grid cells (r, i) are independent and run on a thread pool of
    ``config.workers`` threads. Cells with more candidate values than
    ``config.enumeration_cap`` are sampled evenly, endpoints included, and the
    cases left out are counted in ``cases_skipped``.
    The ``curious`` suite uses the larger ``config.identity_enumeration_cap``.
"""

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import comb, floor
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from genus_core.errors import raise_identity_error, raise_validation_error
from genus_core.utils.logging import get_logger, log_suite_result

from .bounds import (
    beta0_value,
    castelnuovo_value,
    complete_intersection_genus,
    envelope_holds,
    extremal_surface_h0,
    g0_value,
    g_candidates_r9,
    genus_expansion,
    leading_part,
    max_branch_term,
    surface_sections_lower,
)
from .config import CalculatorConfig, load_config
from .params import SurfaceParams, surface_params
from .schemas import AppendixCase, CaseFailure, VerificationReport, Witness

logger = get_logger(__name__)

R4_TABLE_DEGREES = (3, 4, 6, 7, 8, 9, 11, 12, 15, 16, 18, 19, 20, 21, 23, 24)
R4_TABLE_VALUES = (-2, 1, 4, 6, 4, 0, 13, 2, -1, 18, 29, 35, 29, 19, 50, 27)

Cell = Tuple[int, int]
Inputs = Dict[str, int]


def _scalar(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return str(list(value))
    return value


def _order(inputs: Inputs) -> Tuple[int, ...]:
    return (
        inputs.get("r", 0),
        inputs.get("i", 0),
        inputs.get("d", 0),
        *(inputs[key] for key in sorted(inputs) if key not in ("r", "i", "d")),
    )


class _Tally:
    """Accumulates case outcomes for one suite or one grid cell."""

    def __init__(self) -> None:
        self.total = 0
        self.skipped = 0
        self.failures: List[CaseFailure] = []
        self.witnesses: List[Witness] = []

    def equal(self, check: str, inputs: Inputs, expected: Any, got: Any) -> None:
        self.total += 1
        if expected != got:
            self.failures.append(
                CaseFailure(
                    inputs=inputs, check=check, expected=_scalar(expected), got=_scalar(got)
                )
            )

    def holds(self, check: str, inputs: Inputs, condition: bool, margin: Optional[int] = None) -> None:
        self.total += 1
        if not condition:
            self.failures.append(CaseFailure(inputs=inputs, check=check, margin=margin))

    def at_least_zero(self, check: str, inputs: Inputs, margin: int) -> None:
        self.total += 1
        if margin < 0:
            self.failures.append(CaseFailure(inputs=inputs, check=check, margin=margin))
        elif margin == 0:
            self.witnesses.append(Witness(inputs=inputs, check=check))

    def witness(self, check: str, inputs: Inputs) -> None:
        self.witnesses.append(Witness(inputs=inputs, check=check))

    def merge(self, other: "_Tally") -> "_Tally":
        self.total += other.total
        self.skipped += other.skipped
        self.failures.extend(other.failures)
        self.witnesses.extend(other.witnesses)
        return self

    def report(self, suite: str) -> VerificationReport:
        failures = sorted(self.failures, key=lambda f: (_order(f.inputs), f.check))
        witnesses = sorted(self.witnesses, key=lambda w: (_order(w.inputs), w.check))
        log_suite_result(logger, suite, self.total, len(failures), len(witnesses))
        return VerificationReport(
            suite=suite,
            cases_total=self.total,
            cases_failed=len(failures),
            cases_skipped=self.skipped,
            failures=failures,
            witnesses=witnesses,
        )


def _sample(low: int, high: int, cap: int) -> Tuple[List[int], int]:
    """Integers of [low, high], evenly thinned to at most ``cap`` values."""
    count = high - low + 1
    if count <= 0:
        return [], 0
    if count <= cap:
        return list(range(low, high + 1)), 0
    if cap == 1:
        return [low], count - 1
    return [low + (k * (count - 1)) // (cap - 1) for k in range(cap)], count - cap


def _grid(r_max: int, i_max: int, r_min: int = 4, i_min: int = 2) -> List[Cell]:
    return [(r, i) for r in range(r_min, r_max + 1) for i in range(i_min, i_max + 1)]


def _over_cells(cells: Sequence[Cell], check_cell: Callable[[Cell], _Tally], workers: int) -> _Tally:
    if workers > 1 and len(cells) > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            parts = list(executor.map(check_cell, cells))
    else:
        parts = [check_cell(cell) for cell in cells]
    tally = _Tally()
    for part in parts:
        tally.merge(part)
    logger.debug(f"Checked {len(cells)} grid cells")
    return tally


def _positive_beta_cells(cells: Iterable[Cell]) -> List[Cell]:
    return [cell for cell in cells if surface_params(*cell).beta > 0]


# Polynomials of the appendix


def poly_p(i: int) -> int:
    return i**4 + 14 * i**3 - 109 * i**2 + 274 * i - 120


def poly_q(i: int) -> int:
    return i**4 - 26 * i**3 + 23 * i**2 + 50 * i - 24


def verify_appendix_inequality(r: int, i: int) -> AppendixCase:
    """
    Margin s0 - 2(c0 + gamma + 1) for (r, i), together with twice its
    expanded form

        binom(r+i, i) - (i+1)(i^2+2i+2)/2 + i beta - gamma (i+1)(i-1)

    which equals i(i+1)/2 times the margin.
    """
    params = surface_params(r, i)
    if params.beta == 0:
        raise_validation_error("the appendix inequality needs beta > 0", field="beta", value=0)
    s0, c0, gamma, beta = params.s0, params.c0, params.gamma, params.beta
    value = s0 - 2 * (c0 + gamma + 1)
    generale = (
        2 * comb(r + i, i)
        - (i + 1) * (i * i + 2 * i + 2)
        + 2 * i * beta
        - 2 * gamma * (i + 1) * (i - 1)
    )
    if generale != i * (i + 1) * value:
        raise_identity_error("appendix_expanded_form", i * (i + 1) * value, generale, {"r": r, "i": i})
    return AppendixCase(r=r, i=i, beta=beta, s0=s0, c0=c0, gamma=gamma, value=value, generale=generale)


def appendix_r4_table() -> List[AppendixCase]:
    """The sixteen r = 4 cases left open by the sufficiency polynomial."""
    return [verify_appendix_inequality(4, i) for i in R4_TABLE_DEGREES]


# Suites


def verify_stima_numeric(
    r_max: int, i_max: int, config: Optional[CalculatorConfig] = None
) -> VerificationReport:
    config = config or load_config()
    tally = _Tally()

    for i in range(2, i_max + 1):
        pairs = comb(i + 1, 2)
        inputs = {"i": i}
        tally.holds("pairs_chain", inputs, i * pairs + (i + 1) + pairs < comb(4 + i, i))
        tally.holds("cubic", inputs, 12 * i * i + 12 * i + 24 < (4 + i) * (3 + i) * (2 + i))

    def check_cell(cell: Cell) -> _Tally:
        part = _Tally()
        params = surface_params(*cell)
        r, i = cell
        inputs = {"r": r, "i": i}
        s0, c0 = params.s0, params.c0
        part.holds("2c0_below_s0", inputs, 2 * c0 < s0, margin=s0 - 2 * c0)
        part.holds("2c0_at_most_i_plus_1", inputs, 2 * c0 <= i + 1, margin=i + 1 - 2 * c0)
        part.equal(
            "sections_at_c0_plus_1", inputs, i - params.gamma, surface_sections_lower(r, s0, c0 + 1, i)
        )
        return part

    cells = _positive_beta_cells(_grid(r_max, i_max))
    return tally.merge(_over_cells(cells, check_cell, config.workers)).report("stima")


def _r5_appendix_tally(i_max: int, r_max: int, workers: int) -> _Tally:
    tally = _Tally()
    for i in range(2, i_max + 1):
        tally.at_least_zero("p_nonnegative", {"i": i}, poly_p(i))

    def check_cell(cell: Cell) -> _Tally:
        part = _Tally()
        case = verify_appendix_inequality(*cell)
        inputs = {"r": case.r, "i": case.i}
        part.at_least_zero("s0_at_least_2_c0_gamma_1", inputs, case.value)
        part.equal("forms_agree", inputs, True, case.forms_agree)
        return part

    cells = _positive_beta_cells(_grid(r_max, i_max, r_min=5))
    return tally.merge(_over_cells(cells, check_cell, workers))


def verify_r5_appendix_poly(
    i_max: int, r_max: int = 60, config: Optional[CalculatorConfig] = None
) -> VerificationReport:
    """p(i) >= 0 on 2..i_max, and the direct margin for 5 <= r <= r_max."""
    config = config or load_config()
    return _r5_appendix_tally(i_max, r_max, config.workers).report("appendix-poly")


def verify_appendix(
    r_max: int, i_max: int, config: Optional[CalculatorConfig] = None
) -> VerificationReport:
    config = config or load_config()
    tally = _r5_appendix_tally(i_max, r_max, config.workers)

    for i in range(26, 201):
        tally.at_least_zero("q_nonnegative", {"i": i}, poly_q(i))
    for i in range(5):
        tally.equal(
            "p_minus_q", {"i": i}, 40 * i**3 - 132 * i**2 + 224 * i - 96, poly_p(i) - poly_q(i)
        )

    for case, expected in zip(appendix_r4_table(), R4_TABLE_VALUES):
        inputs = {"r": 4, "i": case.i}
        tally.equal("r4_table", inputs, expected, case.value)
        tally.equal("forms_agree", inputs, True, case.forms_agree)
        if case.value == 0:
            tally.witness("r4_table", inputs)

    return tally.report("appendix")


def verify_r6_sharpness_identity(
    d_max: int, config: Optional[CalculatorConfig] = None
) -> VerificationReport:
    params = surface_params(6, 2)
    tally = _Tally()
    for d in range(21, d_max + 1, 3):
        inputs = {"r": 6, "i": 2, "d": d}
        value = comb(d // 3 - 1, 2)
        m, epsilon = divmod(d - 1, params.s0)
        tally.equal("quadratic_form", inputs, d * d - 9 * d + 18, 18 * value)
        tally.equal(
            "closed_form", inputs, value, 9 * comb(m, 2) + m * (epsilon + 1) + (epsilon == 8)
        )
        tally.equal("g0", inputs, value, g0_value(params, d))
    return tally.report("r6")


def verify_remark_r1(
    r_max: int, i_max: int, config: Optional[CalculatorConfig] = None
) -> VerificationReport:
    """
    A degree-s0 surface has section count beta - binom(i+1, 2) < 0 in degree
    i (exactly 0 when beta = 0); every smaller degree leaves a positive count.
    """
    config = config or load_config()

    def check_cell(cell: Cell) -> _Tally:
        part = _Tally()
        r, i = cell
        params = surface_params(r, i)
        inputs = {"r": r, "i": i}
        at_s0 = surface_sections_lower(r, params.s0, 0, i)
        expected = params.beta - params.pairs if params.beta else 0
        part.equal("sections_at_s0", inputs, expected, at_s0)
        if params.beta == 0 and at_s0 == 0:
            part.witness("sections_at_s0", inputs)

        degrees, skipped = _sample(1, params.s0 - 1, config.enumeration_cap)
        part.skipped += skipped
        for sigma in degrees:
            count = surface_sections_lower(r, sigma, 0, i)
            part.holds("sections_below_s0", {**inputs, "sigma": sigma}, count > 0, margin=count)
        return part

    return _over_cells(_grid(r_max, i_max), check_cell, config.workers).report("remark-r1")


def verify_curious(
    r_max: int, i_max: int, config: Optional[CalculatorConfig] = None
) -> VerificationReport:
    """For beta = 0 the bound equals the Castelnuovo bound in P^(s0+1)."""
    config = config or load_config()

    def check_cell(cell: Cell) -> _Tally:
        part = _Tally()
        r, i = cell
        params = surface_params(r, i)
        s0 = params.s0
        degrees, skipped = _sample(s0 + 2, 4 * s0 + 2, config.identity_enumeration_cap)
        part.skipped += skipped
        for d in degrees:
            part.equal(
                "beta0_equals_castelnuovo",
                {"r": r, "i": i, "d": d},
                castelnuovo_value(s0 + 1, d),
                beta0_value(params, d),
            )
        return part

    cells = [
        cell
        for cell in _grid(r_max, min(i_max, 20), r_min=5)
        if surface_params(*cell).beta == 0
    ]
    return _over_cells(cells, check_cell, config.workers).report("curious")


def _brute_branch(s0: int, c0: int, epsilon: int) -> int:
    return max(0, floor(Fraction(2 * c0 - s0 + 1 + epsilon, 2)))


def verify_max_branch(
    r_max: int, i_max: int, config: Optional[CalculatorConfig] = None
) -> VerificationReport:
    config = config or load_config()

    def check_cell(cell: Cell) -> _Tally:
        part = _Tally()
        r, i = cell
        params = surface_params(r, i)
        s0, c0 = params.s0, params.c0
        if s0 <= config.enumeration_cap:
            residues = list(range(s0))
        else:
            # the branch is negative below this window
            window = max(0, s0 - 2 * c0 - 3)
            residues, skipped = _sample(0, window - 1, config.enumeration_cap)
            residues += list(range(window, s0))
            part.skipped += skipped
        base = comb(params.gamma + 1, 2) - params.mu + c0
        for epsilon in residues:
            inputs = {"r": r, "i": i, "epsilon": epsilon}
            expected = _brute_branch(s0, c0, epsilon)
            part.equal("max_term", inputs, expected, max_branch_term(s0, c0, epsilon))
            # with m = 1 the other summands of G0 are epsilon + c0 + binom(gamma+1, 2) - mu
            d = s0 + epsilon + 1
            part.equal("max_term_in_g0", inputs, expected, g0_value(params, d) - epsilon - base)
        return part

    cells = _positive_beta_cells(_grid(r_max, i_max))
    return _over_cells(cells, check_cell, config.workers).report("max-branch")


def verify_envelope(
    r_max: int, i_max: int, d_max: int, config: Optional[CalculatorConfig] = None
) -> VerificationReport:
    config = config or load_config()

    def check_cell(cell: Cell) -> _Tally:
        part = _Tally()
        r, i = cell
        params = surface_params(r, i)
        previous = g0_value(params, params.s0 + 1)
        for d in range(params.s0 + 2, d_max + 1):
            inputs = {"r": r, "i": i, "d": d}
            value = g0_value(params, d)
            inside, slack = envelope_holds(params, d, value)
            part.holds("envelope", inputs, inside, margin=slack)
            part.holds("monotone_in_d", inputs, value >= previous, margin=value - previous)
            previous = value
        return part

    cells = _positive_beta_cells(_grid(r_max, i_max))
    return _over_cells(cells, check_cell, config.workers).report("envelope")


def verify_r9_structure(
    r_max: int, m_values: Sequence[int] = (1, 10, 1000), config: Optional[CalculatorConfig] = None
) -> VerificationReport:
    tally = _Tally()
    for r in range(9, max(r_max, 15) + 1, 3):
        params = surface_params(r, 2)
        s0 = params.s0
        epsilon = s0 - 1
        for m in m_values:
            d = (m + 1) * s0
            inputs = {"r": r, "i": 2, "d": d}
            g0 = g0_value(params, d)
            candidates = g_candidates_r9(r, d, config=config)
            tally.equal("candidates", inputs, [g0 - m - 1, g0 - m, g0 - m + 1, g0], candidates)
            tally.equal("spread", inputs, m + 1, candidates[3] - candidates[0])
            tally.equal("lowest_is_projected_curve", inputs, comb(m, 2) * s0 + m * epsilon, candidates[0])
            tally.equal("g0_closed_form", inputs, comb(m, 2) * s0 + m * (epsilon + 1) + 1, g0)
    return tally.report("r9")


def verify_genus_expansion(
    r_max: int, i_max: int, config: Optional[CalculatorConfig] = None
) -> VerificationReport:
    config = config or load_config()

    def check_cell(cell: Cell) -> _Tally:
        part = _Tally()
        r, i = cell
        params = surface_params(r, i)
        s0 = params.s0
        degrees, skipped = _sample(s0 + 1, 3 * s0 + 1, config.enumeration_cap)
        for pi in range(params.c0 + 1):
            part.skipped += skipped
            for d in degrees:
                part.equal(
                    "expansion",
                    {"r": r, "i": i, "d": d, "pi": pi},
                    Fraction(leading_part(s0, d, pi)),
                    genus_expansion(s0, d, pi),
                )
        return part

    cells = _positive_beta_cells(_grid(r_max, i_max))
    return _over_cells(cells, check_cell, config.workers).report("genus-expansion")


def verify_maximal_rank(r_max: int, config: Optional[CalculatorConfig] = None) -> VerificationReport:
    tally = _Tally()
    for r in range(6, r_max + 1, 3):
        params = surface_params(r, 2)
        s0 = params.s0
        inputs = {"r": r, "i": 2}
        tally.equal("3s0_plus_1", inputs, comb(r + 2, 2), 3 * s0 + 1)
        tally.equal("beta", inputs, 1, params.beta)
        tally.equal("c0", inputs, 1, params.c0)
        tally.equal("gamma", inputs, 0, params.gamma)
        tally.holds("s0_above_r", inputs, s0 > r, margin=s0 - r)
        tally.at_least_zero("cubics", inputs, comb(r + 3, 3) - (6 * s0 + 4))
    return tally.report("maximal-rank")


def verify_residues(r_max: int, config: Optional[CalculatorConfig] = None) -> VerificationReport:
    tally = _Tally()
    for r in range(4, r_max + 1):
        params = surface_params(r, 3)
        inputs = {"r": r, "i": 3}
        tally.equal(
            "gamma_zero_classes",
            inputs,
            r % 36 in (0, 20, 28),
            params.beta > 0 and params.gamma == 0,
        )
        if r % 36 == 5:
            tally.equal("c0_zero", inputs, 0, params.c0)
    return tally.report("residues")


def verify_intersection(
    r_max: int, i_max: int, config: Optional[CalculatorConfig] = None
) -> VerificationReport:
    config = config or load_config()

    def check_cell(cell: Cell) -> _Tally:
        part = _Tally()
        r, i = cell
        params = surface_params(r, i)
        for m in (1, 2, 3):
            d = (m + 1) * params.s0
            part.equal(
                "complete_intersection_is_g0",
                {"r": r, "i": i, "d": d},
                g0_value(params, d),
                complete_intersection_genus(r, d, i),
            )
        return part

    cells = [
        cell
        for cell in _positive_beta_cells(_grid(r_max, i_max))
        if surface_params(*cell).gamma == 0
    ]
    return _over_cells(cells, check_cell, config.workers).report("intersection")


def verify_coarse(
    r_max: int, i_max: int, config: Optional[CalculatorConfig] = None
) -> VerificationReport:
    tally = _Tally()
    for r, i in _positive_beta_cells(_grid(r_max, i_max)):
        params = surface_params(r, i)
        tally.at_least_zero(
            "c0_at_most_castelnuovo", {"r": r, "i": i}, castelnuovo_value(r - 1, params.s0) - params.c0
        )
    return tally.report("coarse")


def verify_mu(
    r_max: int, i_max: int, config: Optional[CalculatorConfig] = None
) -> VerificationReport:
    tally = _Tally()
    for r, i in _grid(r_max, i_max):
        params: SurfaceParams = surface_params(r, i)
        tally.equal(
            "mu_marks_h0_drop",
            {"r": r, "i": i},
            params.mu == 1,
            extremal_surface_h0(r, i) < comb(r + i, i),
        )
    return tally.report("mu")


SuiteRunner = Callable[[CalculatorConfig], VerificationReport]

SUITES: Dict[str, SuiteRunner] = {
    "stima": lambda c: verify_stima_numeric(c.r_max, c.i_max, c),
    "appendix": lambda c: verify_appendix(c.r_max, c.i_max, c),
    "r6": lambda c: verify_r6_sharpness_identity(c.d_max, c),
    "remark-r1": lambda c: verify_remark_r1(c.r_max, c.i_max, c),
    "curious": lambda c: verify_curious(c.r_max, c.i_max, c),
    "max-branch": lambda c: verify_max_branch(c.r_max, c.i_max, c),
    "envelope": lambda c: verify_envelope(c.envelope_r_max, c.envelope_i_max, c.envelope_d_max, c),
    "r9": lambda c: verify_r9_structure(c.r_max, config=c),
    "genus-expansion": lambda c: verify_genus_expansion(c.envelope_r_max, c.envelope_i_max, c),
    "maximal-rank": lambda c: verify_maximal_rank(c.r_max, c),
    "residues": lambda c: verify_residues(c.r_max, c),
    "intersection": lambda c: verify_intersection(c.r_max, c.i_max, c),
    "coarse": lambda c: verify_coarse(c.r_max, c.i_max, c),
    "mu": lambda c: verify_mu(c.r_max, c.i_max, c),
}

SUITE_NAMES = tuple(SUITES)


def run_suite(name: str, config: Optional[CalculatorConfig] = None) -> VerificationReport:
    config = config or load_config()
    runner = SUITES.get(name)
    if runner is None:
        raise_validation_error(f"unknown suite {name!r}", field="suite", value=name)
    logger.info(f"Running suite {name}")
    return runner(config)


def run_all(config: Optional[CalculatorConfig] = None) -> List[VerificationReport]:
    config = config or load_config()
    return [run_suite(name, config) for name in SUITE_NAMES]

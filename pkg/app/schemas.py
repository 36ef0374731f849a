"""
Genus Bounds Calculator - Data Schemas

Pydantic models for every value the calculator accepts or emits. The models
validate invariants on construction and serialize to the stable JSON shapes
printed by the command line.

🏗️ Schema Groups:
    - Inputs: ``ProblemInstance``, ``SectionData``
    - Derived quantities: ``DerivedParams``
    - Bounds: ``BoundResult``, ``ValueResult``
    - Verification: ``CaseFailure``, ``Witness``, ``VerificationReport``, ``AppendixCase``
    - Tables: ``SweepRow``, ``SweepResult``
    - Command line: ``CliInvocation``

🔧 Conventions:
    - All integers are Python ints, never floats; arbitrarily large values are
      kept exact.
    - Unpopulated bound values are ``None``, never 0 (0 is a legal genus).
    - Field order is the serialization order.
"""

from enum import Enum
from typing import Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

Scalar = Union[bool, int, str, None]


class Regime(str, Enum):
    """Which statement a bound value comes from."""

    CLASSICAL = "classical"
    BETA_ZERO = "beta_zero"
    G0 = "g0"
    R6_SHARP = "r6_sharp"
    R9_CANDIDATES = "r9_candidates"
    INTERVAL = "interval"


class Sharpness(str, Enum):
    SHARP = "sharp"
    NOT_KNOWN_SHARP = "not_known_sharp"
    CANDIDATE_SET = "candidate_set"


class ProblemInstance(BaseModel):
    """
    Input triple (r, d, i): a degree-d curve in P^r not lying on any
    hypersurface of degree at most i.

    Operation-specific preconditions (for example r >= 4 for ``derive``) are
    checked by the operations themselves so that they can name the violated
    precondition.
    """

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={"example": {"r": 6, "d": 27, "i": 2}},
    )

    r: int = Field(..., ge=3, description="Dimension of the ambient projective space")
    d: int = Field(..., ge=1, description="Degree of the curve")
    i: int = Field(..., ge=2, description="Degree of the excluded hypersurfaces")


class DerivedParams(BaseModel):
    """
    Every quantity defined by Euclidean division from (r, i) and, when a
    degree is given, from d:

        binom(r+i, i) - (i+1) = alpha * binom(i+1, 2) + beta
        s0 = alpha if beta == 0 else alpha + 1
        d - 1 = m * s0 + epsilon
        binom(i+1, 2) - beta = c0 * i + gamma
        mu = 0 if gamma <= 1 else 1

    ``m`` and ``epsilon`` are ``None`` when no degree was supplied.
    """

    model_config = ConfigDict(frozen=True)

    r: int
    i: int
    d: Optional[int] = None
    alpha: int = Field(..., ge=0)
    beta: int = Field(..., ge=0)
    s0: int = Field(..., ge=1)
    m: Optional[int] = Field(default=None, ge=0)
    epsilon: Optional[int] = Field(default=None, ge=0)
    c0: int = Field(..., ge=0)
    gamma: int = Field(..., ge=0)
    mu: int = Field(..., ge=0, le=1)

    @model_validator(mode="after")
    def _check_divisions(self) -> "DerivedParams":
        pairs = self.i * (self.i + 1) // 2
        if self.beta > pairs - 1:
            raise ValueError("beta must be smaller than binom(i+1, 2)")
        if self.s0 != (self.alpha if self.beta == 0 else self.alpha + 1):
            raise ValueError("s0 must be alpha, or alpha + 1 when beta > 0")
        if self.gamma > self.i - 1:
            raise ValueError("gamma must be smaller than i")
        if self.mu != (0 if self.gamma <= 1 else 1):
            raise ValueError("mu must be 1 exactly when gamma >= 2")
        if (self.m is None) != (self.epsilon is None):
            raise ValueError("m and epsilon are given together")
        if self.epsilon is not None and self.epsilon > self.s0 - 1:
            raise ValueError("epsilon must be smaller than s0")
        return self


class SectionData(BaseModel):
    """Numeric profile of a surface: degree s, sectional genus pi, twist j."""

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={"example": {"s": 9, "pi": 1, "j": 1, "r": 6}},
    )

    s: int = Field(..., ge=1, description="Degree of the surface")
    pi: int = Field(..., ge=0, description="Sectional genus")
    j: int = Field(..., ge=1, description="Twist")
    r: Optional[int] = Field(default=None, ge=2, description="Ambient dimension")


class BoundResult(BaseModel):
    """
    A genus bound together with the regime it was computed in.

    ``threshold_d0`` is ``None`` when d0(r, i) is too large to materialize;
    ``d0_met`` is still decided exactly in that case.
    """

    r: int
    d: int
    i: int
    value: int
    regime: Regime
    sharp: Sharpness = Sharpness.NOT_KNOWN_SHARP
    valid_for_theorem: bool = True
    threshold_d0: Optional[int] = None
    d0_met: bool = False
    candidates: Optional[List[int]] = None
    interval: Optional[Tuple[int, int]] = None

    @model_validator(mode="after")
    def _check_regime(self) -> "BoundResult":
        if self.regime is Regime.R6_SHARP and self.sharp is not Sharpness.SHARP:
            raise ValueError("an r6_sharp bound is sharp")
        if self.regime is Regime.R9_CANDIDATES:
            if self.sharp is not Sharpness.CANDIDATE_SET:
                raise ValueError("r9 bounds are candidate sets")
            if self.candidates is None or len(self.candidates) != 4:
                raise ValueError("r9 bounds carry exactly four candidates")
            if self.candidates != sorted(self.candidates):
                raise ValueError("candidates are listed in ascending order")
        if self.interval is not None and self.interval[0] > self.interval[1]:
            raise ValueError("interval ends are ordered")
        return self


class ValueResult(BaseModel):
    """Plain value of an auxiliary bound (sections, ranges, coefficients)."""

    kind: str
    inputs: Dict[str, int]
    value: Union[int, str, List[int]]


class CaseFailure(BaseModel):
    inputs: Dict[str, int]
    check: str
    expected: Scalar = None
    got: Scalar = None
    margin: Optional[int] = None


class Witness(BaseModel):
    """A case where an inequality holds with no room to spare."""

    inputs: Dict[str, int]
    check: str
    margin: int = 0


class VerificationReport(BaseModel):
    """Outcome of one verification suite."""

    suite: str
    cases_total: int = Field(default=0, ge=0)
    cases_failed: int = Field(default=0, ge=0)
    cases_skipped: int = Field(default=0, ge=0)
    failures: List[CaseFailure] = Field(default_factory=list)
    witnesses: List[Witness] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_counts(self) -> "VerificationReport":
        if self.cases_failed != len(self.failures):
            raise ValueError("cases_failed must equal the number of failures")
        return self

    @property
    def passed(self) -> bool:
        return self.cases_failed == 0


class AppendixCase(BaseModel):
    """
    Margin s0 - 2(c0 + gamma + 1) of the sectional-genus inequality, together
    with twice the left-hand side of its expanded equivalent form.
    """

    r: int
    i: int
    beta: int
    s0: int
    c0: int
    gamma: int
    value: int
    generale: int = Field(..., description="Twice the expanded form; i(i+1) * value")

    @model_validator(mode="after")
    def _check_value(self) -> "AppendixCase":
        if self.value != self.s0 - 2 * (self.c0 + self.gamma + 1):
            raise ValueError("value must equal s0 - 2(c0 + gamma + 1)")
        return self

    @property
    def forms_agree(self) -> bool:
        return (self.value >= 0) == (self.generale >= 0)


class SweepRow(BaseModel):
    """One (r, i, d) row of a bound table."""

    r: int
    i: int
    d: int
    alpha: int
    beta: int
    s0: int
    m: int
    epsilon: int
    c0: int
    gamma: int
    mu: int
    G_castelnuovo: int
    G0: Optional[int] = None
    G_beta0: Optional[int] = None
    regime: Regime
    valid_for_theorem: bool
    d0_met: bool

    @model_validator(mode="after")
    def _check_populated(self) -> "SweepRow":
        if (self.G0 is None) == (self.G_beta0 is None):
            raise ValueError("exactly one of G0 and G_beta0 is populated")
        if (self.beta > 0) != (self.G0 is not None):
            raise ValueError("G0 is populated exactly when beta > 0")
        return self


class SweepResult(BaseModel):
    rows: List[SweepRow] = Field(default_factory=list)
    skipped: int = Field(default=0, ge=0, description="Grid points with d <= s0")


class CliInvocation(BaseModel):
    subcommand: Literal["params", "bound", "verify", "sweep", "appendix-table"]
    flags: Dict[str, Any] = Field(default_factory=dict)
    output_format: Literal["json", "csv", "text"] = "json"

"""
Exact integer primitives and the derived quantities of a problem instance.

All arithmetic is on Python ints, so binomial coefficients of any size stay
exact. ``surface_params`` caches the (r, i) part of the derivation, which is
shared by every degree d of a sweep.
"""

from functools import lru_cache
from math import comb
from typing import NamedTuple, Optional, Tuple

from genus_core.errors import raise_validation_error, require
from genus_core.utils.logging import get_logger

from .schemas import DerivedParams, ProblemInstance

logger = get_logger(__name__)


class SurfaceParams(NamedTuple):
    """Quantities that depend on (r, i) only."""

    r: int
    i: int
    alpha: int
    beta: int
    s0: int
    c0: int
    gamma: int
    mu: int

    @property
    def pairs(self) -> int:
        return self.i * (self.i + 1) // 2


def binomial(n: int, k: int) -> int:
    """n choose k; 0 when k > n."""
    require(n >= 0, "binomial needs n >= 0", field="n", value=n)
    require(k >= 0, "binomial needs k >= 0", field="k", value=k)
    return comb(n, k)


def divmod_exact(a: int, b: int) -> Tuple[int, int]:
    """Euclidean division with 0 <= remainder < b."""
    if b == 0:
        raise_validation_error("division by zero", field="b", value=b)
    require(b > 0, "divisor must be positive", field="b", value=b)
    require(a >= 0, "dividend must be non-negative", field="a", value=a)
    return divmod(a, b)


def _check_surface_inputs(r: int, i: int) -> None:
    require(r >= 4, "r must be at least 4", field="r", value=r)
    require(i >= 2, "i must be at least 2", field="i", value=i)


@lru_cache(maxsize=4096)
def surface_params(r: int, i: int) -> SurfaceParams:
    _check_surface_inputs(r, i)
    pairs = comb(i + 1, 2)
    alpha, beta = divmod_exact(comb(r + i, i) - (i + 1), pairs)
    s0 = alpha if beta == 0 else alpha + 1
    c0, gamma = divmod_exact(pairs - beta, i)
    mu = 0 if gamma <= 1 else 1
    return SurfaceParams(r, i, alpha, beta, s0, c0, gamma, mu)


def degree_split(s0: int, d: int) -> Tuple[int, int]:
    """(m, epsilon) with d - 1 = m * s0 + epsilon."""
    require(d >= 1, "d must be at least 1", field="d", value=d)
    return divmod_exact(d - 1, s0)


def derive_params(r: int, i: int, d: Optional[int] = None) -> DerivedParams:
    params = surface_params(r, i)
    m = epsilon = None
    if d is not None:
        m, epsilon = degree_split(params.s0, d)
    logger.debug(f"Derived parameters for r={r}, i={i}, d={d}: s0={params.s0}, beta={params.beta}")
    return DerivedParams(
        r=r,
        i=i,
        d=d,
        alpha=params.alpha,
        beta=params.beta,
        s0=params.s0,
        m=m,
        epsilon=epsilon,
        c0=params.c0,
        gamma=params.gamma,
        mu=params.mu,
    )


def derive(inst: ProblemInstance) -> DerivedParams:
    """Derived quantities of a full (r, d, i) instance."""
    return derive_params(inst.r, inst.i, inst.d)


def s0_quadric(r: int) -> int:
    """Closed form r(r+3)/6 of s0 for i = 2 and 3 | r."""
    require(r >= 6, "r must be at least 6", field="r", value=r)
    if r % 3:
        raise_validation_error("r must be divisible by 3", field="r", value=r)
    return r * (r + 3) // 6

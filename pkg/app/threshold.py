"""
Degree threshold d0(r, i) beyond which the bound theorems apply.

    d0 = smallest integer > max{ 2(s0+1)/(r-2) * [(r-1)! (s0+1)]^H,
                                 2^(s0+4),
                                 12 (s0+2)^4 }

with H = 1 + 1/2 + ... + 1/(r-2). The first term is irrational; it is
enclosed with ``mpmath.iv`` interval arithmetic and the working precision is
doubled until the enclosure pins down its integer part. If the precision cap
is reached first, the upper end of the enclosure is used, so the returned
threshold never under-approximates.

The power-of-two term is only materialized when s0 + 4 fits in
``threshold_max_bits``; ``threshold_met`` answers "d > d0" without it when d
is smaller than 2^(s0+4).
"""

import threading
from fractions import Fraction
from functools import lru_cache
from math import factorial, floor
from typing import Optional, Tuple

from mpmath import iv
from mpmath.libmp import to_rational

from genus_core.errors import ThresholdTooLargeError
from genus_core.utils.logging import get_logger

from .config import CalculatorConfig, load_config
from .params import surface_params

logger = get_logger(__name__)

# iv.prec is global to the mpmath interval context
_iv_lock = threading.Lock()


def harmonic(n: int) -> Fraction:
    return sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))


def _first_term_enclosure(r: int, s0: int, prec: int) -> Tuple[Fraction, Fraction]:
    exponent = harmonic(r - 2)
    with _iv_lock:
        saved = iv.prec
        iv.prec = prec
        try:
            base = iv.mpf(factorial(r - 1) * (s0 + 1))
            power = iv.exp(iv.ln(base) * (iv.mpf(exponent.numerator) / exponent.denominator))
            value = iv.mpf(2 * (s0 + 1)) / (r - 2) * power
            low, high = value._mpi_
        finally:
            iv.prec = saved
    return Fraction(*to_rational(low)), Fraction(*to_rational(high))


def _first_term_floor(r: int, s0: int, floor_at_least: int, start_bits: int, max_bits: int) -> int:
    """
    Integer part of the first term, or any value <= ``floor_at_least`` when the
    term is certainly below ``floor_at_least + 1``.
    """
    prec = start_bits
    while True:
        low, high = _first_term_enclosure(r, s0, prec)
        if high < floor_at_least + 1:
            return floor_at_least
        if floor(low) == floor(high):
            return floor(low)
        if prec >= max_bits:
            logger.warning(
                f"d0({r}) enclosure still wider than one unit at {prec} bits; using upper end"
            )
            return floor(high)
        prec = min(2 * prec, max_bits)


@lru_cache(maxsize=1024)
def _cached_threshold(r: int, i: int, max_bits: int, start_bits: int, top_bits: int) -> int:
    s0 = surface_params(r, i).s0
    if s0 + 4 > max_bits:
        raise ThresholdTooLargeError(
            f"d0({r}, {i}) exceeds 2^{s0 + 4}",
            context={"r": r, "i": i, "max_bits": max_bits},
        )
    rational_terms = max(1 << (s0 + 4), 12 * (s0 + 2) ** 4)
    first = _first_term_floor(r, s0, rational_terms, start_bits, top_bits)
    d0 = max(first, rational_terms) + 1
    logger.debug(f"d0({r}, {i}) has {d0.bit_length()} bits")
    return d0


def d0_threshold(r: int, i: int, config: Optional[CalculatorConfig] = None) -> int:
    """Smallest integer strictly greater than every term of the threshold."""
    config = config or load_config()
    return _cached_threshold(
        r, i, config.threshold_max_bits, config.interval_start_bits, config.interval_max_bits
    )


def maybe_d0_threshold(r: int, i: int, config: Optional[CalculatorConfig] = None) -> Optional[int]:
    try:
        return d0_threshold(r, i, config)
    except ThresholdTooLargeError:
        return None


def threshold_met(r: int, i: int, d: int, config: Optional[CalculatorConfig] = None) -> bool:
    """Whether d > d0(r, i)."""
    config = config or load_config()
    s0 = surface_params(r, i).s0
    if d.bit_length() <= s0 + 4 or d <= 12 * (s0 + 2) ** 4:
        return False
    d0 = _cached_threshold(
        r,
        i,
        max(config.threshold_max_bits, d.bit_length()),
        config.interval_start_bits,
        config.interval_max_bits,
    )
    return d > d0

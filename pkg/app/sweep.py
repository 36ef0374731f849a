"""
Bound tables over (r, i, d) grids and their CSV / JSON serialization.

Rows are produced in lexicographic (r, i, d) order whatever the number of
worker threads, and both encoders are byte-stable: the same rows always give
the same bytes.
"""

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from genus_core.errors import require
from genus_core.utils.logging import get_logger

from .bounds import beta0_value, castelnuovo_value, g0_value, theorem_applies
from .config import CalculatorConfig, load_config
from .params import surface_params
from .schemas import Regime, SweepResult, SweepRow
from .threshold import threshold_met

logger = get_logger(__name__)

COLUMNS = (
    "r",
    "i",
    "d",
    "alpha",
    "beta",
    "s0",
    "m",
    "epsilon",
    "c0",
    "gamma",
    "mu",
    "G_castelnuovo",
    "G0",
    "G_beta0",
    "regime",
    "valid_for_theorem",
    "d0_met",
)

# integers beyond this are emitted as JSON strings
JSON_SAFE_INTEGER = 2**53 - 1


def _cell_rows(
    r: int, i: int, degrees: Sequence[int], config: CalculatorConfig
) -> Tuple[List[SweepRow], int]:
    params = surface_params(r, i)
    rows: List[SweepRow] = []
    skipped = 0
    for d in degrees:
        if d <= params.s0:
            skipped += 1
            continue
        m, epsilon = divmod(d - 1, params.s0)
        positive = params.beta > 0
        rows.append(
            SweepRow(
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
                G_castelnuovo=castelnuovo_value(r, d),
                G0=g0_value(params, d) if positive else None,
                G_beta0=None if positive else beta0_value(params, d),
                regime=Regime.G0 if positive else Regime.BETA_ZERO,
                valid_for_theorem=theorem_applies(r, i) if positive else r >= 5,
                d0_met=threshold_met(r, i, d, config),
            )
        )
    return rows, skipped


def sweep(
    r_range: Iterable[int],
    i_range: Iterable[int],
    d_range: Iterable[int],
    config: Optional[CalculatorConfig] = None,
) -> SweepResult:
    """
    One row per (r, i, d) with d > s0(r, i); grid points with d <= s0 are
    counted in ``skipped``.
    """
    config = config or load_config()
    rs = sorted(set(r_range))
    is_ = sorted(set(i_range))
    ds = sorted(set(d_range))
    require(bool(rs) and bool(is_) and bool(ds), "sweep grid is empty")
    require(rs[0] >= 4, "r must be at least 4 throughout the sweep", field="r", value=rs[0])
    require(is_[0] >= 2, "i must be at least 2 throughout the sweep", field="i", value=is_[0])
    require(ds[0] >= 1, "d must be at least 1 throughout the sweep", field="d", value=ds[0])

    cells = [(r, i) for r in rs for i in is_]
    if config.workers > 1 and len(cells) > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as executor:
            parts = list(executor.map(lambda cell: _cell_rows(*cell, ds, config), cells))
    else:
        parts = [_cell_rows(r, i, ds, config) for r, i in cells]

    rows = [row for cell_rows, _ in parts for row in cell_rows]
    skipped = sum(count for _, count in parts)
    logger.info(f"Sweep produced {len(rows)} rows over {len(cells)} cells ({skipped} skipped)")
    return SweepResult(rows=rows, skipped=skipped)


def _cell_text(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Regime):
        return value.value
    return str(value)


def _row_values(row: SweepRow) -> List[Any]:
    return [getattr(row, column) for column in COLUMNS]


def emit_csv(rows: Iterable[SweepRow]) -> bytes:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(COLUMNS)
    for row in rows:
        writer.writerow([_cell_text(value) for value in _row_values(row)])
    return buffer.getvalue().encode("utf-8")


def _json_value(value: Any) -> Any:
    if isinstance(value, Regime):
        return value.value
    if isinstance(value, int) and not isinstance(value, bool) and abs(value) > JSON_SAFE_INTEGER:
        return str(value)
    return value


def emit_json(rows: Iterable[SweepRow]) -> bytes:
    payload: List[Dict[str, Any]] = [
        {column: _json_value(value) for column, value in zip(COLUMNS, _row_values(row))}
        for row in rows
    ]
    return json.dumps(payload, indent=2, ensure_ascii=True).encode("utf-8")


def load_json(data: Union[bytes, str]) -> List[SweepRow]:
    """Parse ``emit_json`` output back into rows."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    return [SweepRow.model_validate(item) for item in json.loads(data)]

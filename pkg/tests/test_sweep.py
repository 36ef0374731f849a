import json

import pytest

from genus_core.errors import InvalidInputError
from app.schemas import Regime
from app.sweep import COLUMNS, emit_csv, emit_json, load_json, sweep


def test_single_row_for_quadrics_in_p6(small_config):
    result = sweep([6], [2], [27], small_config)
    assert result.skipped == 0
    (row,) = result.rows
    assert (row.s0, row.m, row.epsilon, row.c0, row.gamma, row.mu) == (9, 2, 8, 1, 0, 0)
    assert row.G_castelnuovo == 55
    assert row.G0 == 28
    assert row.G_beta0 is None
    assert row.regime is Regime.G0
    assert row.d0_met is False


def test_beta_zero_row(small_config):
    (row,) = sweep([4], [2], [13], small_config).rows
    assert row.G0 is None
    assert row.G_beta0 == 12
    assert row.regime is Regime.BETA_ZERO
    assert row.valid_for_theorem is False


def test_rows_are_lexicographic_and_skip_small_degrees(small_config):
    result = sweep(range(4, 7), range(2, 4), [30, 10, 20], small_config)
    keys = [(row.r, row.i, row.d) for row in result.rows]
    assert keys == sorted(keys)
    # only (6, 3) has s0 = 14 >= 10
    assert result.skipped == 1
    assert len(result.rows) == 17


@pytest.mark.parametrize(
    "r_range, i_range, d_range",
    [([3], [2], [10]), ([6], [1], [10]), ([6], [2], [0]), ([], [2], [10])],
)
def test_invalid_grids(r_range, i_range, d_range, small_config):
    with pytest.raises(InvalidInputError):
        sweep(r_range, i_range, d_range, small_config)


def test_csv_layout(small_config):
    text = emit_csv(sweep([6], [2], [27], small_config).rows).decode("utf-8")
    lines = text.split("\n")
    assert lines[0] == ",".join(COLUMNS)
    assert lines[1] == "6,2,27,8,1,9,2,8,1,0,0,55,28,,g0,true,false"
    assert text.endswith("\n")


def test_csv_header_only_for_empty_table():
    assert emit_csv([]) == (",".join(COLUMNS) + "\n").encode("utf-8")


def test_json_uses_null_for_missing_bound(small_config):
    payload = json.loads(emit_json(sweep([4, 6], [2], [27], small_config).rows))
    beta_zero, positive = payload
    assert list(beta_zero) == list(COLUMNS)
    assert beta_zero["G0"] is None
    assert positive["G_beta0"] is None
    assert positive["regime"] == "g0"


def test_empty_json():
    assert emit_json([]) == b"[]"


def test_json_round_trip(small_config):
    rows = sweep(range(4, 8), range(2, 5), range(20, 40, 7), small_config).rows
    assert load_json(emit_json(rows)) == rows


def test_large_values_are_json_strings(small_config):
    rows = sweep([40], [20], [10**14], small_config).rows
    payload = json.loads(emit_json(rows))
    value = payload[0]["G_castelnuovo"]
    assert isinstance(value, str)
    assert int(value) == rows[0].G_castelnuovo
    assert load_json(emit_json(rows)) == rows


def test_output_independent_of_thread_count(small_config, threaded_config):
    grid = (range(4, 13), range(2, 6), range(1, 200, 13))
    single = sweep(*grid, small_config)
    threaded = sweep(*grid, threaded_config)
    assert single.skipped == threaded.skipped
    assert emit_csv(single.rows) == emit_csv(threaded.rows)
    assert emit_json(single.rows) == emit_json(threaded.rows)

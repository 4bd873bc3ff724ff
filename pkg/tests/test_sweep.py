import json

import pytest

from src.combinatorics.partitions import Partition
from src.core.config import DEFAULT_SETTINGS
from src.core.errors import BoundExceededError
from src.criteria.cohomology import Source
from src.oracle.sweep import COLUMNS, format_table, oracle_row, oracle_sweep, to_frame, to_json_lines

P = Partition.of


def test_sweep_order_and_matches():
    rows = oracle_sweep(3, 3)
    assert [row.partition for row in rows] == [P(1), P(2), P(1, 1), P(3), P(2, 1), P(1, 1, 1)]
    assert all(row.match for row in rows)
    by_shape = {row.partition: row for row in rows}
    assert (by_shape[P(2, 1)].h0_oracle, by_shape[P(2, 1)].h1_oracle) == (1, 1)
    assert by_shape[P(2, 1)].h1_criterion == 1
    assert by_shape[P(3)].h1_criterion is None


def test_sweep_degree_selection():
    rows = oracle_sweep(2, 5, degrees=(0,))
    assert all(row.h1_oracle is None and row.h1_criterion is None for row in rows)
    assert [row.h0_oracle for row in rows] == [1, 1, 0]
    with pytest.raises(ValueError):
        oracle_sweep(2, 5, degrees=(2,))


def test_row_records_errors():
    tight = DEFAULT_SETTINGS.with_overrides({"tabloids": 2})
    row = oracle_row(P(2, 1), 3, (0, 1), tight)
    assert row.error.startswith("BoundExceededError")
    assert row.dim is None
    assert not row.match
    with pytest.raises(BoundExceededError):
        oracle_row(P(2, 1), 3, (0, 1), tight, raise_errors=True)


def test_row_results_are_oracle_sourced():
    results = oracle_row(P(2, 1), 3, (0, 1)).results()
    assert [(r.degree, r.dim, r.source) for r in results] == [(0, 1, Source.ORACLE), (1, 1, Source.ORACLE)]


def test_frame_and_table():
    rows = oracle_sweep(3, 3)
    df = to_frame(rows)
    assert list(df.columns) == COLUMNS
    assert len(df) == 6
    table = format_table(rows)
    assert "(2,1)" in table
    assert "—" in table


def test_json_lines():
    lines = to_json_lines(oracle_sweep(2, 3)).splitlines()
    assert len(lines) == 3
    record = json.loads(lines[2])
    assert record["partition"] == [1, 1]
    assert record["match"] is True
    assert set(record) == set(COLUMNS)

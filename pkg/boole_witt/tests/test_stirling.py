import sys
import threading
from math import factorial

import pytest

from boole_witt.src.errors import IndexOutOfRange
from boole_witt.src import stirling as stirling_mod
from boole_witt.src.polynomial import falling_factorial_poly, rising_factorial_poly
from boole_witt.src.stirling import (
    StirlingKind,
    stirling1,
    stirling1_unsigned,
    stirling2,
    stirling2_via_series,
    stirling_table,
    table_rows,
)


def test_known_values():
    assert stirling1(3, 2) == -3
    assert stirling1(4, 2) == 11
    assert stirling1_unsigned(3, 2) == 3
    assert stirling2(4, 2) == 7
    assert stirling2(5, 3) == 25
    assert stirling1(0, 0) == stirling2(0, 0) == 1
    assert stirling2(3, 0) == 0


def test_first_kind_matches_falling_factorial_coefficients():
    for n in range(8):
        ff = falling_factorial_poly(n)
        rf = rising_factorial_poly(n)
        for l in range(n + 1):
            assert stirling1(n, l) == ff.coefficient(l)
            assert stirling1_unsigned(n, l) == rf.coefficient(l)


def test_series_route_agrees_with_recurrence():
    for n in range(9):
        for l in range(n + 1):
            assert stirling2_via_series(n, l) == stirling2(n, l)


def test_orthogonality():
    # sum_l S2(n,l) S1(l,m) = [n == m]
    for n in range(7):
        for m in range(n + 1):
            total = sum(stirling2(n, l) * stirling1(l, m) for l in range(m, n + 1))
            assert total == (1 if n == m else 0)


@pytest.mark.parametrize("n,l", [(3, 4), (-1, 0), (2, -1)])
def test_out_of_range(n, l):
    with pytest.raises(IndexOutOfRange):
        stirling2(n, l)


def test_table_rows_lexicographic():
    assert table_rows("s2", 1) == [(0, 0, 1), (1, 0, 0), (1, 1, 1)]
    rows = table_rows(StirlingKind.FIRST_SIGNED, 3)
    assert (3, 2, -3) in rows
    assert rows == sorted(rows, key=lambda r: (r[0], r[1]))
    assert (3, 2, 3) in table_rows("s1u", 3)


def test_table_get_outside_triangle():
    table = stirling_table("s2", 4)
    assert table.get(4, 5) == 0
    with pytest.raises(IndexOutOfRange):
        table.get(5, 1)


def test_unsigned_first_kind_rows_sum_to_factorial():
    for n in range(13):
        assert sum(stirling1_unsigned(n, l) for l in range(n + 1)) == factorial(n)


def test_concurrent_extension_builds_one_consistent_table(monkeypatch):
    monkeypatch.setattr(stirling_mod, "_ROWS", {kind: [[1]] for kind in StirlingKind})
    max_n, workers = 300, 8
    barrier = threading.Barrier(workers)
    tables, errors = [], []

    def build():
        barrier.wait()
        try:
            tables.append(stirling_table(StirlingKind.FIRST_UNSIGNED, max_n))
        except Exception as exc:  # surfaced by the assertion below
            errors.append(exc)

    old_interval = sys.getswitchinterval()
    sys.setswitchinterval(1e-6)
    try:
        threads = [threading.Thread(target=build) for _ in range(workers)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
    finally:
        sys.setswitchinterval(old_interval)

    assert errors == []
    assert len(tables) == workers
    rows = stirling_mod._ROWS[StirlingKind.FIRST_UNSIGNED]
    assert len(rows) == max_n + 1
    for n, row in enumerate(rows):
        assert len(row) == n + 1
        assert sum(row) == factorial(n)
    assert all(t.values == tables[0].values for t in tables)

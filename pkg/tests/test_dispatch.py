"""Feasibility verdicts and the construction route table."""

from __future__ import annotations

import pytest

from smr import (
    InfeasibleError,
    Params,
    construct,
    feasibility,
    is_shiftable,
    replay,
    verify_smr,
)

from goldens import (
    GRID_2x11_CONSTRUCTED,
    GRID_2x12,
    GRID_7x14_CONSTRUCTED,
    GRID_8x12,
    golden,
)


@pytest.mark.parametrize(
    "m,n,r,feasible,reason",
    [
        (2, 5, 5, False, "FAIL_M2_RESIDUE"),
        (2, 6, 6, False, "FAIL_M2_RESIDUE"),
        (2, 11, 11, True, "OK_M2"),
        (2, 3, 3, True, "OK_M2"),
        (2, 4, 4, True, "OK_M2"),
        (2, 4, 8, False, "FAIL_ARITH"),
        (3, 3, 2, False, "FAIL_SMALL"),
        (5, 10, 4, True, "OK_GENERAL"),
        (3, 6, 4, True, "OK_GENERAL"),
        (5, 10, 5, False, "FAIL_PARITY"),
        (3, 5, 3, False, "FAIL_PARITY"),
        (4, 7, 3, False, "FAIL_ARITH"),
        (1, 2, 4, False, "FAIL_SMALL"),
        (0, 1, 1, False, "FAIL_SMALL"),
        (6, 9, 3, True, "OK_GENERAL"),
        (4, 2, 1, False, "FAIL_SMALL"),
    ],
)
def test_feasibility_verdicts(m, n, r, feasible, reason):
    v = feasibility(m, n, r)
    assert (v.feasible, v.reason) == (feasible, reason)


def test_verdict_rendering():
    assert str(feasibility(2, 5, 5)) == "infeasible: FAIL_M2_RESIDUE"
    assert str(feasibility(2, 4, 4)) == "feasible: OK_M2"


def test_construct_rejects_infeasible_with_verdict():
    with pytest.raises(InfeasibleError) as err:
        construct(2, 5, 5)
    assert err.value.verdict.reason == "FAIL_M2_RESIDUE"
    with pytest.raises(InfeasibleError):
        construct(3, 5, 3)


@pytest.mark.parametrize(
    "m,n,r,grid",
    [
        (2, 12, 12, GRID_2x12),
        (2, 11, 11, GRID_2x11_CONSTRUCTED),
        (8, 12, 3, GRID_8x12),
        (7, 14, 4, GRID_7x14_CONSTRUCTED),
    ],
)
def test_construct_pinned_outputs(m, n, r, grid):
    array, _ = construct(m, n, r)
    assert array == golden(grid)


def test_construct_smallest_m2_points():
    a3, _ = construct(2, 3, 3)
    assert a3.row(1) == {1: 1, 2: 2, 3: -3}
    a4, _ = construct(2, 4, 4)
    assert verify_smr(a4, Params(2, 4, 4, 2)).ok


def test_construct_unpinned_point_verifies():
    array, _ = construct(9, 63, 14)
    assert verify_smr(array, Params(9, 63, 14, 2)).ok


@pytest.mark.parametrize(
    "m,r",
    [
        (2, 8),  # rule 1
        (2, 7),  # rule 2
        (6, 3),  # rule 3
        (6, 5),  # rule 4
        (6, 8),  # rule 5
        (4, 6),  # rule 6, m = 0 mod 4
        (6, 6),  # rule 6, m = 6 exactly
        (10, 10),  # rule 6, m = 2 mod 4, m > 6
        (4, 9),  # rule 7
        (4, 7),  # rule 8
        (3, 4),  # rule 9, m = 3
        (5, 4),  # rule 9, m = 5
        (7, 8),  # rule 9, m = 3 mod 4
        (9, 4),  # rule 9, m = 1 mod 4
        (3, 6),  # rule 10, m = 3
        (5, 6),  # rule 10, m = 5
        (7, 6),  # rule 10, m = 3 mod 4
        (9, 10),  # rule 10, m = 1 mod 4
        (13, 6),  # rule 10, larger m = 1 mod 4
        (11, 14),  # rule 10, larger m = 3 mod 4
    ],
)
def test_every_route_verifies(m, r):
    n = r if m == 2 else (m * r) // 2
    array, trace = construct(m, n, r)
    assert verify_smr(array, Params(m, n, r, 2)).ok
    assert replay(trace) == array


@pytest.mark.parametrize(
    "m,r",
    [(2, 8), (6, 8), (4, 12), (6, 6), (10, 10), (3, 4), (9, 4), (3, 6), (9, 10)],
)
def test_shiftable_routes(m, r):
    # rules 1, 5, 6, 9 and 10 promise shiftable output
    n = r if m == 2 else (m * r) // 2
    array, _ = construct(m, n, r)
    assert is_shiftable(array)


def test_construct_is_deterministic():
    first = construct(9, 63, 14)
    second = construct(9, 63, 14)
    assert first[0] == second[0]
    assert first[1] == second[1]


def test_trace_replay_matches_everywhere():
    for m, r in [(2, 11), (6, 7), (8, 10), (5, 8), (7, 6), (12, 5)]:
        n = r if m == 2 else (m * r) // 2
        array, trace = construct(m, n, r)
        assert replay(trace) == array


def test_trace_is_readable():
    _, trace = construct(2, 12, 12)
    assert str(trace) == "seed id=S_2x4\ninflate_horizontal k=3"


def test_small_sweep_all_points():
    for m in range(2, 13):
        for r in range(3, 13):
            n = r if m == 2 else (m * r) // 2
            v = feasibility(m, n, r)
            if v.feasible:
                array, _ = construct(m, n, r)
                assert verify_smr(array, Params(m, n, r, 2)).ok, (m, n, r)
            else:
                with pytest.raises(InfeasibleError):
                    construct(m, n, r)

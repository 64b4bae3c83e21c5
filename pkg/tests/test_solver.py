from __future__ import annotations

import numpy as np
import pytest

from lsext.extension import CoverSystem, is_good_extension
from lsext.solver import (
    BUDGET_EXHAUSTED,
    FEASIBLE,
    INFEASIBLE,
    SolverConfig,
    format_solutions,
    parse_matrix_text,
    solve,
    solve_branch_and_bound,
    solve_exhaustive,
    solve_greedy,
    solve_matrix_text,
)
from oracles import oracle_cover_feasible


def system_of(rows, l, s, **kw):
    return CoverSystem(bits=np.array(rows, dtype=np.uint8), l=l, s=s, **kw)


def test_single_cell_feasible():
    outcome = solve_exhaustive(system_of([[1]], 1, 1))
    assert outcome.status == FEASIBLE
    assert outcome.solutions[0].columns == (0,)
    assert outcome.exhausted


def test_two_rows_one_column_infeasible():
    outcome = solve_exhaustive(system_of([[1, 0], [0, 1]], 1, 1))
    assert outcome.status == INFEASIBLE
    assert outcome.exhausted


def test_identity_matrix_needs_all_columns():
    eye = np.eye(4, dtype=np.uint8)
    assert solve_branch_and_bound(CoverSystem(bits=eye, l=3, s=1)).status == INFEASIBLE
    assert solve_branch_and_bound(CoverSystem(bits=eye, l=4, s=1)).status == FEASIBLE


def test_multiset_repeats_allowed_for_multicover():
    outcome = solve_exhaustive(system_of([[1]], 2, 2))
    assert outcome.status == FEASIBLE
    assert outcome.solutions[0].columns == (0, 0)


def test_distinct_mode_forbids_repeats():
    sys_multi = system_of([[1]], 2, 2)
    sys_distinct = system_of([[1]], 2, 2, distinct=True)
    assert solve_exhaustive(sys_multi).status == FEASIBLE
    assert solve_exhaustive(sys_distinct).status == INFEASIBLE
    assert solve_branch_and_bound(sys_distinct).status == INFEASIBLE


def test_masked_columns_never_selected():
    system = system_of([[1, 1]], 1, 1, masked=frozenset({0}))
    for solver in (solve_exhaustive, solve_branch_and_bound, solve_greedy):
        outcome = solver(system)
        assert all(0 not in sol.columns for sol in outcome.solutions)
    assert solve_exhaustive(system).solutions[0].columns == (1,)


def test_budget_exhausted_is_not_infeasible():
    system = system_of([[1, 0], [0, 1]], 2, 1)
    cfg = SolverConfig(strategy="exhaustive", node_limit=1, max_solutions=5)
    outcome = solve_exhaustive(system, cfg)
    assert outcome.status == BUDGET_EXHAUSTED
    assert not outcome.exhausted
    cfg_b = SolverConfig(strategy="bnb", node_limit=1, max_solutions=5)
    outcome_b = solve_branch_and_bound(system, cfg_b)
    assert outcome_b.status in (BUDGET_EXHAUSTED, FEASIBLE)


def test_max_solutions_truncation_marks_unexhausted():
    system = system_of([[1, 1, 1]], 1, 1)
    cfg = SolverConfig(strategy="exhaustive", max_solutions=2)
    outcome = solve_exhaustive(system, cfg)
    assert [s.columns for s in outcome.solutions] == [(0,), (1,)]
    assert not outcome.exhausted
    full = solve_exhaustive(system, SolverConfig(strategy="exhaustive", max_solutions=10))
    assert len(full.solutions) == 3 and full.exhausted


def test_solutions_sorted_lexicographically():
    system = system_of([[1, 1, 1], [1, 1, 0]], 2, 1)
    for solver in (solve_exhaustive, solve_branch_and_bound):
        outcome = solver(system, SolverConfig(strategy="exhaustive", max_solutions=50))
        cols = [s.columns for s in outcome.solutions]
        assert cols == sorted(cols)


def test_greedy_contract():
    outcome = solve_greedy(system_of([[1]], 1, 1))
    assert outcome.status == FEASIBLE
    system = system_of([[1, 0], [1, 1]], 1, 1)
    out = solve_greedy(system)
    assert out.status == FEASIBLE
    assert is_good_extension(system, out.solutions[0].columns)


def test_greedy_can_fail_where_exhaustive_succeeds():
    # Column 0 covers the most rows, but the only size-2 cover is {1, 2};
    # classic greedy trap.
    rows = [
        [1, 1, 0],
        [1, 1, 0],
        [1, 0, 1],
        [1, 0, 1],
        [0, 1, 0],
        [0, 0, 1],
    ]
    system = system_of(rows, 2, 1)
    greedy = solve_greedy(system)
    assert greedy.status == BUDGET_EXHAUSTED
    assert greedy.solutions == ()
    exhaustive = solve_exhaustive(system)
    assert exhaustive.status == FEASIBLE
    assert exhaustive.solutions[0].columns == (1, 2)


def test_greedy_failure_is_never_reported_infeasible():
    system = system_of([[1, 0], [0, 1]], 1, 1)
    assert solve_greedy(system).status == BUDGET_EXHAUSTED


def test_cross_strategy_agreement_random():
    rng = np.random.default_rng(19)
    for _ in range(250):
        t = int(rng.integers(1, 6))
        h = int(rng.integers(1, 8))
        bits = rng.integers(0, 2, size=(t, h)).astype(np.uint8)
        l = int(rng.integers(1, 4))
        s = int(rng.integers(1, 3))
        system = CoverSystem(bits=bits, l=l, s=s)
        cfg = SolverConfig(strategy="exhaustive", max_solutions=6, node_limit=500_000)
        a = solve_exhaustive(system, cfg)
        b = solve_branch_and_bound(system, cfg)
        assert a.status == b.status
        assert a.solutions == b.solutions
        feasible, first = oracle_cover_feasible(bits, l, s)
        assert (a.status == FEASIBLE) == feasible
        if feasible:
            assert a.solutions[0].columns == first


def test_cross_strategy_agreement_wide_instances():
    rng = np.random.default_rng(101)
    for _ in range(10):
        bits = (rng.random((20, 50)) < 0.25).astype(np.uint8)
        for l, s in [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2)]:
            system = CoverSystem(bits=bits, l=l, s=s)
            cfg = SolverConfig(strategy="exhaustive", max_solutions=3, node_limit=2_000_000)
            a = solve_exhaustive(system, cfg)
            b = solve_branch_and_bound(system, cfg)
            assert a.status == b.status
            if a.solutions:
                assert a.solutions[0] == b.solutions[0]


def test_monotonicity_in_l():
    rng = np.random.default_rng(53)
    for _ in range(60):
        t = int(rng.integers(1, 5))
        h = int(rng.integers(1, 6))
        bits = rng.integers(0, 2, size=(t, h)).astype(np.uint8)
        s = int(rng.integers(1, 3))
        for l in (1, 2):
            if solve_exhaustive(CoverSystem(bits=bits, l=l, s=s)).status == FEASIBLE:
                bigger = solve_exhaustive(CoverSystem(bits=bits, l=l + 1, s=s))
                assert bigger.status == FEASIBLE


def test_determinism():
    rng = np.random.default_rng(7)
    bits = rng.integers(0, 2, size=(6, 9)).astype(np.uint8)
    system = CoverSystem(bits=bits, l=2, s=1)
    for solver in (solve_exhaustive, solve_branch_and_bound, solve_greedy):
        first = solver(system)
        second = solver(system)
        assert first == second


def test_slacks_attached_to_solutions():
    system = system_of([[1, 1], [0, 1]], 2, 1)
    outcome = solve_exhaustive(system)
    sol = next(s for s in outcome.solutions if s.columns == (1, 1))
    assert sol.slacks == (1, 1)


def test_best_solution_maximizes_min_slack():
    # {0,1} covers row0 twice/row1 once; {1,1} covers both twice.
    system = system_of([[1, 1], [0, 1]], 2, 1)
    outcome = solve_exhaustive(system, SolverConfig(strategy="exhaustive", max_solutions=10))
    assert outcome.best is not None
    assert outcome.best.columns == (1, 1)
    assert outcome.best.min_slack == 1


def test_solver_config_validation():
    with pytest.raises(ValueError):
        SolverConfig(strategy="magic")
    with pytest.raises(ValueError):
        SolverConfig(max_solutions=0)
    with pytest.raises(ValueError):
        SolverConfig(node_limit=0)


def test_dispatch():
    system = system_of([[1]], 1, 1)
    assert solve(system, SolverConfig(strategy="greedy")).status == FEASIBLE
    assert solve(system).status == FEASIBLE


def test_text_interface_round_trip():
    text = "2 3\n101\n011\n"
    bits = parse_matrix_text(text)
    assert bits.tolist() == [[1, 0, 1], [0, 1, 1]]
    outcome = solve_matrix_text(text, l=1, s=1)
    assert outcome.status == FEASIBLE
    assert format_solutions(outcome) == "2\n"
    multi = solve_matrix_text(text, l=2, s=1, config=SolverConfig(max_solutions=10))
    lines = format_solutions(multi).splitlines()
    assert lines[0] == "0 1"


def test_parse_matrix_text_errors():
    with pytest.raises(ValueError):
        parse_matrix_text("")
    with pytest.raises(ValueError):
        parse_matrix_text("2 3\n101\n")
    with pytest.raises(ValueError):
        parse_matrix_text("1 3\n10x\n")

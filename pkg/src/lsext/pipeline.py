"""Code file I/O, puncturing, single extension steps and chain search.

The code file format is plain text: optional `#` comment lines, a header
`q k n`, then k rows of n space-separated element codes.  Serialization is
canonical (no comments, single spaces, trailing newline), so serialize/parse
round trips are byte-stable.

A chain climbs distances by repeating single extension steps: per round it
tries l = 1..max_l, each with the largest sound distance increment
s = min(weight gap, l), and applies the first feasible step after full
re-verification.  Puncturing is the inverse operation: remove l generator
columns such that every minimum-weight codeword has at least s zeros among
them, which drops the length by l while costing at most l - s distance.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field, replace

import numpy as np

from .code import LinearCode
from .errors import ParseError, VerificationError
from .extension import (
    CoverSystem,
    apply_extension,
    coverage_matrix,
    cover_system,
    projective_filter,
    verify_extension,
)
from .field import gf
from .solver import BUDGET_EXHAUSTED, FEASIBLE, SolverConfig, solve

STEP_APPLIED = "applied"
STEP_INFEASIBLE = "infeasible"
STEP_INCONCLUSIVE = "inconclusive"


# -- code file I/O ---------------------------------------------------------------


def parse_code(text: str, cap: int | None = None) -> LinearCode:
    """Parse the text format into a LinearCode; errors carry line numbers."""
    header: tuple[int, int, int] | None = None
    rows: list[list[int]] = []
    header_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            values = [int(tok) for tok in fields]
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if len(values) != 3:
                raise ParseError(f"header must be 'q k n', got {line!r}", lineno)
            q, k, n = values
            if q < 2 or k < 1 or n < 1:
                raise ParseError(f"header values must be positive (q >= 2), got {line!r}", lineno)
            header = (q, k, n)
            header_line = lineno
            continue
        q, k, n = header
        if len(rows) == k:
            raise ParseError(f"expected exactly {k} matrix rows, found more", lineno)
        if len(values) != n:
            raise ParseError(f"expected {n} entries, got {len(values)}", lineno)
        bad = [v for v in values if not 0 <= v < q]
        if bad:
            raise ParseError(f"element code {bad[0]} out of range 0..{q - 1}", lineno)
        rows.append(values)
    if header is None:
        raise ParseError("missing 'q k n' header")
    q, k, n = header
    if len(rows) != k:
        raise ParseError(f"expected {k} matrix rows, found {len(rows)}", header_line)
    try:
        field = gf(q)
    except ValueError as exc:
        raise ParseError(str(exc), header_line) from None
    return LinearCode(field, np.array(rows, dtype=np.uint8), cap=cap)


def serialize_code(code: LinearCode) -> str:
    """Canonical text form: 'q k n' header then the generator rows."""
    lines = [f"{code.q} {code.k} {code.n}"]
    for row in code.matrix:
        lines.append(" ".join(str(int(v)) for v in row))
    return "\n".join(lines) + "\n"


# -- step records and reports ----------------------------------------------------


@dataclass(frozen=True)
class StepRecord:
    """One extend/puncture attempt with its re-verified outcome."""

    operation: str
    l: int
    s: int
    status: str
    params_before: tuple[int, int, int]
    params_after: tuple[int, int, int] | None = None
    columns: tuple[int, ...] = ()
    column_vectors: tuple[str, ...] = ()
    min_weight_count_after: int | None = None
    predicted_min_weight_count: int | None = None
    solver_strategy: str = ""
    solver_status: str = ""
    solver_nodes: int = 0
    solutions_found: int = 0
    search_exhausted: bool = False
    candidates_total: int = 0
    candidates_masked: int = 0
    rows: int = 0
    slack_min: int | None = None
    slack_max: int | None = None
    zero_slack_rows: int | None = None

    def describe(self) -> str:
        n, k, d = self.params_before
        head = f"{self.operation} (l={self.l}, s={self.s}) on [{n},{k},{d}]"
        if self.status != STEP_APPLIED:
            return f"{head}: {self.status}"
        assert self.params_after is not None
        n2, k2, d2 = self.params_after
        cols = ",".join(str(c) for c in self.columns)
        return (
            f"{head} -> [{n2},{k2},{d2}] columns=[{cols}] "
            f"A_d={self.min_weight_count_after} nodes={self.solver_nodes}"
        )


@dataclass(frozen=True)
class ChainPolicy:
    """Knobs for chain search."""

    max_l: int = 2
    max_total_added: int | None = None
    target_distance: int | None = None
    projective: bool = False
    solver: SolverConfig = dc_field(default_factory=SolverConfig)

    def __post_init__(self) -> None:
        if self.max_l < 1:
            raise ValueError("max_l must be >= 1")


@dataclass(frozen=True)
class ChainReport:
    """Ordered record of verified chain steps plus the stopping reason."""

    q: int
    params_start: tuple[int, int, int]
    params_final: tuple[int, int, int]
    steps: tuple[StepRecord, ...]
    stopping_reason: str

    def to_text(self) -> str:
        n, k, d = self.params_start
        lines = [f"chain report for a [{n},{k},{d}]_{self.q} code"]
        for i, step in enumerate(self.steps, start=1):
            lines.append(f"step {i}: {step.describe()}")
        if not self.steps:
            lines.append("no steps applied")
        nf, kf, df = self.params_final
        lines.append(f"stop: {self.stopping_reason}")
        lines.append(f"final: [{nf},{kf},{df}]_{self.q}")
        return "\n".join(lines) + "\n"


def _vector_strings(vectors: np.ndarray) -> tuple[str, ...]:
    return tuple("".join(str(int(v)) for v in vec) for vec in vectors)


# -- single extension step ---------------------------------------------------------


def check_gap_allows(code: LinearCode, s: int) -> None:
    """Reject a requested s above the weight gap: the d+s claim needs the
    second-smallest weight to be at least d+s."""
    gap = code.weight_gap_or_none()
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    if gap is not None and s > gap:
        raise ValueError(
            f"requested s={s} exceeds the weight gap {gap}: a distance increase of s "
            f"is only guaranteed when the second-smallest weight is at least d+s"
        )


def default_s(code: LinearCode, l: int) -> int:
    """Largest sound and attainable increment: min(weight gap, l); gap-free codes
    are capped only by coverage, so s = l."""
    gap = code.weight_gap_or_none()
    return l if gap is None else min(gap, l)


def extend_once(
    code: LinearCode,
    l: int,
    s: int | None = None,
    policy: ChainPolicy | None = None,
    cap: int | None = None,
) -> tuple[LinearCode | None, StepRecord]:
    """One (l,s)-extension attempt: build the system, solve, apply, re-verify.

    Among returned solutions the one maximizing the minimum slack is applied
    (ties to lexicographically smallest), pushing former minimum-weight words
    as high as possible for the next step.  Infeasibility is a result, not an
    error; a solver budget stop is reported as inconclusive.
    """
    policy = policy or ChainPolicy()
    if s is None:
        s = default_s(code, l)
    check_gap_allows(code, s)
    matrix = coverage_matrix(code, cap)
    system = cover_system(matrix, l, s)
    if policy.projective:
        system = projective_filter(system, code)
    outcome = solve(system, policy.solver)
    base = StepRecord(
        operation="extend",
        l=l,
        s=s,
        status=STEP_INFEASIBLE,
        params_before=code.params(),
        solver_strategy=policy.solver.strategy,
        solver_status=outcome.status,
        solver_nodes=outcome.nodes_explored,
        solutions_found=len(outcome.solutions),
        search_exhausted=outcome.exhausted,
        candidates_total=system.num_columns,
        candidates_masked=len(system.masked),
        rows=system.num_rows,
    )
    if outcome.status == BUDGET_EXHAUSTED:
        return None, replace(base, status=STEP_INCONCLUSIVE)
    if outcome.status != FEASIBLE:
        return None, base
    best = outcome.best
    assert best is not None
    new_code = apply_extension(code, best.columns, matrix)
    report = verify_extension(code, new_code, s, best)
    record = replace(
        base,
        status=STEP_APPLIED,
        params_after=new_code.params(),
        columns=best.columns,
        column_vectors=_vector_strings(matrix.columns[list(best.columns)]),
        min_weight_count_after=report.min_weight_count_after,
        predicted_min_weight_count=report.predicted_min_weight_count,
        slack_min=min(best.slacks),
        slack_max=max(best.slacks),
        zero_slack_rows=sum(1 for y in best.slacks if y == 0),
    )
    return new_code, record


# -- special puncturing ------------------------------------------------------------


@dataclass(frozen=True)
class PunctureRecord:
    """Outcome of a puncture attempt."""

    l: int
    s: int
    status: str
    params_before: tuple[int, int, int]
    params_after: tuple[int, int, int] | None = None
    columns: tuple[int, ...] = ()
    qualifies: bool | None = None
    predicted_distance: int | None = None
    solver_status: str = ""
    solver_nodes: int = 0


def zero_coverage_system(code: LinearCode, l: int, s: int) -> CoverSystem:
    """Covering system over generator positions: position j covers row i when
    the minimum-weight codeword i has letter zero at j."""
    reps = code.min_weight_representatives()
    letters = code.field.vecmat(reps, code.matrix)
    bits = (letters == 0).astype(np.uint8)
    return CoverSystem(bits=bits, l=l, s=s, distinct=True)


def remove_columns(code: LinearCode, columns) -> LinearCode:
    """Drop the given generator columns; raises RankDeficientError on collapse."""
    requested = [int(j) for j in columns]
    cols = set(requested)
    if len(cols) != len(requested):
        raise ValueError("puncture columns must be distinct")
    if cols and (min(cols) < 0 or max(cols) >= code.n):
        raise ValueError(f"column index out of range 0..{code.n - 1}")
    keep = [j for j in range(code.n) if j not in cols]
    return LinearCode(code.field, code.matrix[:, keep])


def special_puncture(
    code: LinearCode,
    l: int,
    s: int,
    columns=None,
    solver_config: SolverConfig | None = None,
) -> tuple[LinearCode | None, PunctureRecord]:
    """Remove l columns so every minimum-weight codeword has >= s zeros among them.

    With explicit `columns` the removal is performed unconditionally and the
    record reports whether the zero-coverage property actually holds (the
    d - l + s prediction is only quoted when it does).  Without `columns` the
    same solver machinery as extension searches the zero-coverage system over
    generator positions; no qualifying set is an infeasibility result.
    """
    if not 1 <= l < code.n:
        raise ValueError(f"need 1 <= l < n={code.n}, got l={l}")
    if s < 1 or s > l:
        raise ValueError(f"need 1 <= s <= l, got s={s}")
    system = zero_coverage_system(code, l, s)
    if columns is not None:
        cols = tuple(sorted(int(j) for j in columns))
        if len(cols) != l:
            raise ValueError(f"expected {l} columns, got {len(cols)}")
        coverage = system.bits[:, list(cols)].sum(axis=1, dtype=np.int64)
        qualifies = bool(np.all(coverage >= s))
        new_code = remove_columns(code, cols)
        record = PunctureRecord(
            l=l,
            s=s,
            status=STEP_APPLIED,
            params_before=code.params(),
            params_after=new_code.params(),
            columns=cols,
            qualifies=qualifies,
            predicted_distance=code.d - l + s if qualifies else None,
        )
        return new_code, record
    outcome = solve(system, solver_config or SolverConfig())
    if outcome.status == BUDGET_EXHAUSTED:
        return None, PunctureRecord(
            l=l,
            s=s,
            status=STEP_INCONCLUSIVE,
            params_before=code.params(),
            solver_status=outcome.status,
            solver_nodes=outcome.nodes_explored,
        )
    if outcome.status != FEASIBLE:
        return None, PunctureRecord(
            l=l,
            s=s,
            status=STEP_INFEASIBLE,
            params_before=code.params(),
            solver_status=outcome.status,
            solver_nodes=outcome.nodes_explored,
        )
    best = outcome.best
    assert best is not None
    new_code = remove_columns(code, best.columns)
    # Qualifying removals keep min-weight words at >= d-l+s and every other
    # word at >= d+gap-l, so recomputation must clear the smaller of the two.
    gap = code.weight_gap_or_none()
    floor = code.d - l + s if gap is None else min(code.d - l + s, code.d + gap - l)
    if new_code.d < floor:
        raise VerificationError(
            f"puncturing {l} columns dropped the distance from {code.d} to {new_code.d}, "
            f"below the guaranteed floor {floor}"
        )
    record = PunctureRecord(
        l=l,
        s=s,
        status=STEP_APPLIED,
        params_before=code.params(),
        params_after=new_code.params(),
        columns=best.columns,
        qualifies=True,
        predicted_distance=code.d - l + s,
        solver_status=outcome.status,
        solver_nodes=outcome.nodes_explored,
    )
    return new_code, record


# -- chain search -------------------------------------------------------------------


def chain_search(code: LinearCode, policy: ChainPolicy | None = None, cap: int | None = None) -> ChainReport:
    """Greedy distance climbing: smallest feasible l first, s = min(gap, l).

    Stops at the target distance, when the total added length would exceed
    the budget, or after a round where every l was infeasible.  Every applied
    step is re-verified from scratch; the report never relies on predictions.
    """
    policy = policy or ChainPolicy()
    start = code.params()
    steps: list[StepRecord] = []
    current = code
    added_total = 0
    reason = None
    while reason is None:
        if policy.target_distance is not None and current.d >= policy.target_distance:
            reason = f"target distance {policy.target_distance} reached"
            break
        applied = None
        any_inconclusive = False
        any_tried = False
        for l in range(1, policy.max_l + 1):
            if policy.max_total_added is not None and added_total + l > policy.max_total_added:
                continue
            any_tried = True
            new_code, record = extend_once(current, l, None, policy, cap)
            if record.status == STEP_APPLIED:
                assert new_code is not None
                applied = (new_code, record, l)
                break
            if record.status == STEP_INCONCLUSIVE:
                any_inconclusive = True
        if applied is None:
            if not any_tried:
                reason = f"total added length budget {policy.max_total_added} reached"
            elif any_inconclusive:
                reason = f"solver budget exhausted before finding an extension (l <= {policy.max_l})"
            else:
                reason = f"no feasible extension with l <= {policy.max_l}"
            break
        new_code, record, l = applied
        steps.append(record)
        current = new_code
        added_total += l
    return ChainReport(
        q=code.q,
        params_start=start,
        params_final=current.params(),
        steps=tuple(steps),
        stopping_reason=reason,
    )

"""Column extensions that raise a code's minimum distance.

The coverage matrix has one row per minimum-weight message representative and
one column per candidate extension column (canonical subspace representative);
an entry is 1 where appending that column would add a nonzero letter to that
codeword.  Appending a multiset of l columns such that every row picks up at
least s nonzero letters yields an [n+l, k]_q code whose minimum distance is at
least d+s, provided the second-smallest weight of the original code was at
least d+s.  The per-row surplus over s (the slack) gives the exact new weight
of each former minimum-weight codeword: d + s + slack.

Equivalently, the coverage matrix is the complement of the rows of the
point-hyperplane incidence matrix whose normals are the minimum-weight
representatives; `lsext.geometry` provides that view.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field, replace

import numpy as np

from .code import LinearCode
from .errors import ConsistencyError, InfeasibleSolutionError, VerificationError
from .field import canonical_representatives
from .geometry import code_points


@dataclass(frozen=True, eq=False)
class CoverageMatrix:
    """0/1 matrix pairing min-weight representatives with candidate columns.

    bits[i, j] = 1 iff the inner product of representative i with candidate
    column j is nonzero.  Rows follow min-weight-representative order, columns
    follow canonical-representative order; both orders are fixed by
    `canonical_representatives`.  No row is all zero.
    """

    code: LinearCode = dc_field(repr=False)
    representatives: np.ndarray
    columns: np.ndarray
    bits: np.ndarray

    @property
    def t(self) -> int:
        return self.bits.shape[0]

    @property
    def h(self) -> int:
        return self.bits.shape[1]


@dataclass(frozen=True, eq=False)
class CoverSystem:
    """Covering instance: choose l columns so every row is covered >= s times.

    `masked` columns may never be selected; `distinct` forbids picking the
    same column twice (needed when columns are generator positions to remove,
    as in puncturing).  `matrix` is set when the columns are candidate
    extension columns and is required by the projective filter.
    """

    bits: np.ndarray
    l: int
    s: int
    masked: frozenset[int] = frozenset()
    distinct: bool = False
    matrix: CoverageMatrix | None = dc_field(default=None, repr=False)

    def __post_init__(self) -> None:
        if self.l < 1 or self.s < 1:
            raise ValueError(f"need l >= 1 and s >= 1, got l={self.l}, s={self.s}")
        bad = [j for j in self.masked if not 0 <= j < self.bits.shape[1]]
        if bad:
            raise ValueError(f"masked column indices out of range: {sorted(bad)}")

    @property
    def num_columns(self) -> int:
        return self.bits.shape[1]

    @property
    def num_rows(self) -> int:
        return self.bits.shape[0]

    def allowed_columns(self) -> list[int]:
        return [j for j in range(self.num_columns) if j not in self.masked]


@dataclass(frozen=True, order=True)
class ExtensionSolution:
    """A chosen column multiset with its per-row slacks (coverage minus s)."""

    columns: tuple[int, ...]
    slacks: tuple[int, ...] = dc_field(compare=False)

    @property
    def min_slack(self) -> int:
        return min(self.slacks)


def coverage_matrix(code: LinearCode, cap: int | None = None) -> CoverageMatrix:
    """Build the min-weight-representative x candidate-column coverage matrix."""
    reps = code.min_weight_representatives()
    columns = canonical_representatives(code.field, code.k, cap)
    bits = (code.field.inner(reps, columns) != 0).astype(np.uint8)
    bits.setflags(write=False)
    return CoverageMatrix(code=code, representatives=reps, columns=columns, bits=bits)


def cover_system(matrix: CoverageMatrix, l: int, s: int) -> CoverSystem:
    """Covering system asking for l candidate columns covering every row >= s times."""
    return CoverSystem(bits=matrix.bits, l=l, s=s, matrix=matrix)


def _as_multiset(x) -> tuple[int, ...]:
    cols = tuple(sorted(int(j) for j in x))
    if not cols:
        raise ValueError("column multiset must be nonempty")
    return cols


def coverage_of(system: CoverSystem, x) -> np.ndarray:
    """Per-row coverage of a column multiset, counting multiplicity."""
    cols = _as_multiset(x)
    if len(cols) != system.l:
        raise ValueError(f"solution must choose exactly l={system.l} columns, got {len(cols)}")
    hit = [j for j in cols if j in system.masked]
    if hit:
        raise ValueError(f"solution uses masked columns {sorted(set(hit))}")
    if system.distinct and len(set(cols)) != len(cols):
        raise ValueError("solution repeats a column but the system requires distinct columns")
    if cols[0] < 0 or cols[-1] >= system.num_columns:
        raise ValueError(f"column index out of range 0..{system.num_columns - 1}")
    return system.bits[:, list(cols)].sum(axis=1, dtype=np.int64)


def is_good_extension(system: CoverSystem, x) -> bool:
    """True iff every row is covered at least s times by the multiset x."""
    return bool(np.all(coverage_of(system, x) >= system.s))


def slacks(system: CoverSystem, x) -> np.ndarray:
    """Per-row slack (coverage - s); raises when x does not cover the system."""
    cov = coverage_of(system, x)
    y = cov - system.s
    if np.any(y < 0):
        short = np.nonzero(y < 0)[0].tolist()
        raise InfeasibleSolutionError(f"rows {short} are covered fewer than s={system.s} times")
    return y


def solution_for(system: CoverSystem, x) -> ExtensionSolution:
    cols = _as_multiset(x)
    return ExtensionSolution(columns=cols, slacks=tuple(int(v) for v in slacks(system, cols)))


def apply_extension(code: LinearCode, x, matrix: CoverageMatrix) -> LinearCode:
    """Append the chosen candidate columns (sorted, repeats adjacent) to the code."""
    if matrix.code is not code and not np.array_equal(matrix.code.matrix, code.matrix):
        raise ConsistencyError("coverage matrix was built from a different generator matrix")
    cols = _as_multiset(x)
    if cols[0] < 0 or cols[-1] >= matrix.h:
        raise ValueError(f"column index out of range 0..{matrix.h - 1}")
    appended = matrix.columns[list(cols)].T
    return LinearCode(code.field, np.concatenate([code.matrix, appended], axis=1))


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of re-verifying an extended code from scratch."""

    params_before: tuple[int, int, int]
    params_after: tuple[int, int, int]
    s_used: int
    required_distance: int
    min_weight_count_after: int
    predicted_min_weight_count: int | None = None

    @property
    def prediction_agrees(self) -> bool | None:
        if self.predicted_min_weight_count is None:
            return None
        return self.predicted_min_weight_count == self.min_weight_count_after


def verify_extension(
    old: LinearCode, new: LinearCode, s: int, solution: ExtensionSolution | None = None
) -> VerificationReport:
    """Recompute the new code's distribution and enforce the distance claim.

    The required bound is d_old + s when the old code's weight gap allows a
    guaranteed increase of s (gap >= s, or no second weight exists), else
    d_old + 1.  Any violation, including a distance gain above the number of
    appended columns, raises VerificationError: solutions are validated
    before application, so failure here means an implementation bug.

    When the applied solution is passed along, the slack-derived count of
    minimum-weight words, (q-1) * #{zero-slack rows}, is reported next to the
    recomputed A_d; the two agree exactly when every new minimum-weight word
    descends from an old one, and the report only flags, never asserts, that.
    """
    added = new.n - old.n
    if added < 1 or new.k != old.k or new.q != old.q:
        raise ConsistencyError(
            f"extended code [{new.n},{new.k}]_{new.q} does not extend [{old.n},{old.k}]_{old.q}"
        )
    gap = old.weight_gap_or_none()
    required = old.d + (s if (gap is None or s <= gap) else 1)
    d_new = new.d
    if d_new < required:
        raise VerificationError(
            f"extension claims minimum distance >= {required} but recomputation finds {d_new}"
        )
    if d_new > old.d + added:
        raise VerificationError(
            f"distance rose by {d_new - old.d} after appending only {added} columns"
        )
    predicted = None
    if solution is not None:
        zero_slack = sum(1 for y in solution.slacks if y == 0)
        predicted = zero_slack * (old.q - 1)
    return VerificationReport(
        params_before=old.params(),
        params_after=new.params(),
        s_used=s,
        required_distance=required,
        min_weight_count_after=new.min_weight_count,
        predicted_min_weight_count=predicted,
    )


def projective_filter(system: CoverSystem, code: LinearCode) -> CoverSystem:
    """Mask every candidate column whose point already lies in the code's multiset.

    Solutions of the filtered system use only points outside the code, so a
    projective code stays projective after extension by distinct columns.
    """
    if system.matrix is None:
        raise ValueError("projective filtering needs a system built from a coverage matrix")
    points = code_points(code)
    extra = {
        j for j, col in enumerate(system.matrix.columns) if points.contains(col)
    }
    return replace(system, masked=frozenset(system.masked | extra))


def format_matrix(bits: np.ndarray) -> str:
    """Text dump of a 0/1 matrix: header '<rows> <cols>', then 0/1 rows."""
    rows, cols = bits.shape
    lines = [f"{rows} {cols}"]
    for row in bits:
        lines.append("".join("1" if b else "0" for b in row))
    return "\n".join(lines) + "\n"

"""Command-line interface.

Subcommands: analyze, extend, puncture, chain, incidence, dump-d.
Exit codes: 0 success/feasible, 1 infeasible, 2 inconclusive (solver budget),
3 input error.  LSEXT_ENUM_CAP overrides the enumeration cap.

All output is deterministic: identical inputs produce byte-identical text.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .code import LinearCode
from .errors import LsextError
from .extension import coverage_matrix, format_matrix
from .field import gf
from .geometry import format_incidence, incidence_matrix
from .pipeline import (
    STEP_APPLIED,
    STEP_INCONCLUSIVE,
    ChainPolicy,
    chain_search,
    check_gap_allows,
    default_s,
    extend_once,
    parse_code,
    serialize_code,
    special_puncture,
)
from .solver import SolverConfig

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_INCONCLUSIVE = 2
EXIT_INPUT_ERROR = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors, but exit code 2 means
    'inconclusive' here, so usage errors are remapped to 3."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


def _load(path: str) -> LinearCode:
    return parse_code(Path(path).read_text())


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _params(code: LinearCode) -> str:
    n, k, d = code.params()
    return f"[{n},{k},{d}]_{code.q}"


def cmd_analyze(args) -> int:
    code = _load(args.file)
    print(f"code: {_params(code)}")
    if code.is_degenerate:
        print("degenerate: yes")
    dist = code.weight_distribution()
    print("weight distribution:", " ".join(f"{w}:{dist[w]}" for w in sorted(dist)))
    print(f"A_d: {code.min_weight_count}")
    print(f"min-weight representatives: {code.num_min_weight_representatives}")
    gap = code.weight_gap_or_none()
    print(f"weight gap: {gap if gap is not None else 'undefined (single nonzero weight)'}")
    return EXIT_OK


def cmd_extend(args) -> int:
    code = _load(args.file)
    if args.l < 1:
        raise ValueError(f"--l must be >= 1, got {args.l}")
    s = args.s if args.s is not None else default_s(code, args.l)
    check_gap_allows(code, s)
    policy = ChainPolicy(
        max_l=args.l,
        projective=args.projective,
        solver=SolverConfig(strategy=args.strategy, max_solutions=args.max_solutions),
    )
    new_code, rec = extend_once(code, args.l, s, policy)
    print(f"code: {_params(code)}")
    usable = rec.candidates_total - rec.candidates_masked
    print(f"candidates: {rec.candidates_total}  masked: {rec.candidates_masked}  usable: {usable}")
    print(f"system: l={rec.l} s={rec.s} rows={rec.rows}")
    search = "complete" if rec.search_exhausted else "stopped early"
    print(f"solver: {rec.solver_strategy}  status: {rec.solver_status}  nodes: {rec.solver_nodes}  search: {search}")
    print(f"solutions found: {rec.solutions_found}")
    if rec.status == STEP_APPLIED:
        assert new_code is not None
        cols = " ".join(str(c) for c in rec.columns)
        vecs = " ".join(rec.column_vectors)
        print(f"chosen columns: {cols} [{vecs}]")
        print(f"slacks: min={rec.slack_min} max={rec.slack_max} zero={rec.zero_slack_rows}/{rec.rows}")
        print(f"extended code: {_params(new_code)}")
        verdict = "agree" if rec.predicted_min_weight_count == rec.min_weight_count_after else "differ"
        print(
            f"minimum-weight words: {rec.min_weight_count_after} recomputed, "
            f"{rec.predicted_min_weight_count} slack-predicted -> {verdict}"
        )
        if args.out:
            Path(args.out).write_text(serialize_code(new_code))
            print(f"wrote: {args.out}")
        return EXIT_OK
    if rec.status == STEP_INCONCLUSIVE:
        print("inconclusive: node budget exhausted before a solution was found")
        return EXIT_INCONCLUSIVE
    print(f"no (l={rec.l}, s={rec.s})-extension exists")
    return EXIT_INFEASIBLE


def cmd_puncture(args) -> int:
    code = _load(args.file)
    new_code, rec = special_puncture(code, args.l, args.s)
    print(f"code: {_params(code)}")
    print(f"system: l={rec.l} s={rec.s} over {code.n} positions")
    print(f"solver: status: {rec.solver_status}  nodes: {rec.solver_nodes}")
    if rec.status == STEP_APPLIED:
        assert new_code is not None
        print(f"removed columns: {' '.join(str(c) for c in rec.columns)}")
        print(f"predicted distance: >= {rec.predicted_distance} when the second-smallest weight allows")
        print(f"punctured code: {_params(new_code)}")
        if args.out:
            Path(args.out).write_text(serialize_code(new_code))
            print(f"wrote: {args.out}")
        return EXIT_OK
    if rec.status == STEP_INCONCLUSIVE:
        print("inconclusive: node budget exhausted before a solution was found")
        return EXIT_INCONCLUSIVE
    print(f"no qualifying column set: some minimum-weight word has fewer than s={rec.s} "
          f"zeros in every candidate set")
    return EXIT_INFEASIBLE


def cmd_chain(args) -> int:
    code = _load(args.file)
    policy = ChainPolicy(
        max_l=args.max_l,
        max_total_added=args.max_total,
        target_distance=args.target_d,
        projective=args.projective,
    )
    report = chain_search(code, policy)
    text = report.to_text()
    sys.stdout.write(text)
    if args.report:
        Path(args.report).write_text(text)
    if report.steps or report.stopping_reason.startswith("target distance"):
        return EXIT_OK
    if "budget" in report.stopping_reason:
        return EXIT_INCONCLUSIVE
    return EXIT_INFEASIBLE


def cmd_incidence(args) -> int:
    field = gf(args.q)
    matrix = incidence_matrix(field, args.k)
    _emit(format_incidence(matrix), args.out)
    return EXIT_OK


def cmd_dump_d(args) -> int:
    code = _load(args.file)
    _emit(format_matrix(coverage_matrix(code).bits), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lsext", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="print parameters, weight distribution and gap")
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("extend", help="search for distance-raising columns and append them")
    p.add_argument("file")
    p.add_argument("--l", type=int, required=True, help="number of columns to append")
    p.add_argument("--s", type=int, default=None, help="required nonzero letters per minimum-weight word (default: min(weight gap, l))")
    p.add_argument("--projective", action="store_true", help="exclude columns already among the code's points")
    p.add_argument("--strategy", choices=["exhaustive", "bnb", "greedy"], default="bnb")
    p.add_argument("--max-solutions", type=int, default=10)
    p.add_argument("--out", default=None, help="write the extended code to this file")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("puncture", help="remove columns where minimum-weight words are zero")
    p.add_argument("file")
    p.add_argument("--l", type=int, required=True, help="number of columns to remove")
    p.add_argument("--s", type=int, required=True, help="required zeros per minimum-weight word")
    p.add_argument("--out", default=None, help="write the punctured code to this file")
    p.set_defaults(func=cmd_puncture)

    p = sub.add_parser("chain", help="repeat extensions to climb the minimum distance")
    p.add_argument("file")
    p.add_argument("--max-l", type=int, default=2, dest="max_l")
    p.add_argument("--max-total", type=int, default=None, dest="max_total", help="cap on total appended columns")
    p.add_argument("--target-d", type=int, default=None, dest="target_d")
    p.add_argument("--projective", action="store_true")
    p.add_argument("--report", default=None, help="also write the report to this file")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("incidence", help="dump the point-hyperplane incidence matrix")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_incidence)

    p = sub.add_parser("dump-d", help="dump the coverage matrix (header 't h', 0/1 rows)")
    p.add_argument("file")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_dump_d)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (LsextError, ValueError, OSError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())

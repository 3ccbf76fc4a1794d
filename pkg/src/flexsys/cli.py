"""Command-line front end: ``flexsys <command> FILE ...``.

Exit status is 0 on success, 1 when the answer is negative (inconsistent,
not equivalent, not a member, inconclusive) and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .errors import FlexError, RobustnessError
from .extlinalg import DEFAULT_MAX_DET_ORDER
from .extnum import format_ext, format_neutrix
from .robustness import FEASIBLE, is_feasible_system, robustness_matrix
from .scalar import format_eps
from .solutions import Relation, solution_equiv, solution_membership
from .solver import consistency_check, feasibility_space, integrate, solve, to_increasing_echelon
from .textio import format_solution, parse_point, parse_system, scalar_json

OK, NEGATIVE, USAGE = 0, 1, 2


class _Usage(Exception):
    pass


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _Usage(f"{path}: {exc.strerror}") from exc
    try:
        return parse_system(text)
    except FlexError as exc:
        raise _Usage(f"{path}: {exc}") from exc


def _table(rows, rhs) -> list[str]:
    return ["  [" + ", ".join(format_eps(v) for v in r) + " | " + format_ext(b) + "]" for r, b in zip(rows, rhs)]


def cmd_solve(args) -> tuple[int, str]:
    S = _load(args.file)
    Z = solve(S)
    return (OK if Z.consistent else NEGATIVE), format_solution(Z, args.format, args.exact)


def cmd_echelon(args) -> tuple[int, str]:
    S = _load(args.file)
    I = integrate(S)
    E = to_increasing_echelon(I)
    bad = consistency_check(E)
    if args.format == "json":
        doc = {
            "integrated": {
                "P": [[scalar_json(v, args.exact) for v in r] for r in I.P],
                "rhs": [format_ext(b) for b in I.rhs],
                "constraint_rows": [i + 1 for i in I.constraint_rows],
            },
            "echelon": {
                "Q": [[scalar_json(v, args.exact) for v in r] for r in E.Q],
                "rhs": [format_ext(c) for c in E.C],
            },
            "permutation": [p + 1 for p in E.permutation],
            "rank": E.r,
            "offending_rows": list(bad),
        }
        return OK, json.dumps(doc, indent=2, ensure_ascii=False)
    lines = ["integrated system:", *_table(I.P, I.rhs), "echelon system:", *_table(E.Q, E.C)]
    lines.append("permutation: " + " ".join(str(p + 1) for p in E.permutation))
    lines.append(f"rank: {E.r}")
    return OK, "\n".join(lines)


def cmd_feasibility(args) -> tuple[int, str]:
    S = _load(args.file)
    F = feasibility_space(S)
    I = integrate(S)
    K = [[format_eps(v) for v in I.P[i]] for i in I.constraint_rows]
    verdict = None
    m, n = S.shape
    if m <= n:
        verdict = is_feasible_system(S, args.max_det_order).verdict
    code = NEGATIVE if verdict not in (None, FEASIBLE) else OK
    if args.format == "json":
        doc = {"F": [format_neutrix(f) for f in F], "constraint_matrix": K, "verdict": verdict}
        return code, json.dumps(doc, indent=2, ensure_ascii=False)
    lines = ["F: (" + ", ".join(format_neutrix(f) for f in F) + ")", "constraint matrix:"]
    lines += ["  [" + ", ".join(r) + "]" for r in K] or ["  (empty)"]
    if verdict is not None:
        lines.append(f"criterion: {verdict}")
    return code, "\n".join(lines)


def cmd_robustness(args) -> tuple[int, str]:
    S = _load(args.file)
    if not S.A.is_exact():
        raise _Usage(f"{args.file}: robustness needs a real coefficient matrix")
    try:
        rep = robustness_matrix(S.A, S.B, args.max_det_order)
    except RobustnessError as exc:
        return NEGATIVE, f"{type(exc).__name__}: {exc}"
    code = OK if rep.verified_equivalent else NEGATIVE
    if args.format == "json":
        doc = {
            "E": [[format_neutrix(N) for N in r] for r in rep.E],
            "R": [[format_ext(a) for a in r] for r in rep.R.rows],
            "d": scalar_json(rep.d, args.exact),
            "d_columns": [scalar_json(v, args.exact) for v in rep.d_cols],
            "preconditions": rep.preconditions,
            "verified_equivalent": rep.verified_equivalent,
        }
        return code, json.dumps(doc, indent=2, ensure_ascii=False)
    lines = ["E:"]
    lines += ["  [" + ", ".join(format_neutrix(N) for N in r) + "]" for r in rep.E]
    lines.append("R:")
    lines += ["  [" + ", ".join(format_ext(a) for a in r) + "]" for r in rep.R.rows]
    lines.append("preconditions: " + ", ".join(f"{k}={'ok' if v else 'FAILED'}" for k, v in rep.preconditions.items()))
    lines.append(f"verified_equivalent: {str(rep.verified_equivalent).lower()}")
    return code, "\n".join(lines)


def cmd_check(args) -> tuple[int, str]:
    S = _load(args.file)
    try:
        x = parse_point(args.point)
    except FlexError as exc:
        raise _Usage(f"--point: {exc}") from exc
    if len(x) != S.shape[1]:
        raise _Usage(f"--point has {len(x)} coordinates, system has {S.shape[1]} variables")
    inside = solution_membership(solve(S), x)
    if args.format == "json":
        return (OK if inside else NEGATIVE), json.dumps({"member": inside})
    return (OK if inside else NEGATIVE), "member" if inside else "not a member"


def cmd_equiv(args) -> tuple[int, str]:
    S1, S2 = _load(args.file1), _load(args.file2)
    if S1.shape[1] != S2.shape[1]:
        raise _Usage("the systems have different numbers of variables")
    rel = solution_equiv(solve(S1), solve(S2))
    code = OK if rel is Relation.EQUAL else NEGATIVE
    if args.format == "json":
        return code, json.dumps({"relation": rel.value}, ensure_ascii=False)
    return code, rel.value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--exact", action="store_true", help="serialize scalars as numerator/denominator coefficient lists")
    common.add_argument("--max-det-order", type=int, default=DEFAULT_MAX_DET_ORDER, metavar="N")
    parser = argparse.ArgumentParser(prog="flexsys", description="Solve flexible systems of linear inclusions.")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("solve", parents=[common], help="solve one or more systems")
    p.add_argument("files", nargs="+", metavar="FILE")
    p.set_defaults(func=cmd_solve, multi=True)
    for name, func, help_ in (
        ("echelon", cmd_echelon, "show integrated and echelon systems"),
        ("feasibility", cmd_feasibility, "show the feasibility space and constraint matrix"),
        ("robustness", cmd_robustness, "robustness matrix of a real-coefficient system"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("file", metavar="FILE")
        p.set_defaults(func=func, multi=False)
    p = sub.add_parser("check", parents=[common], help="test whether a point solves the system")
    p.add_argument("file", metavar="FILE")
    p.add_argument("--point", required=True, help='comma separated coordinates, e.g. "4,0,-30"')
    p.set_defaults(func=cmd_check, multi=False)
    p = sub.add_parser("equiv", parents=[common], help="compare the solution sets of two systems")
    p.add_argument("file1", metavar="FILE1")
    p.add_argument("file2", metavar="FILE2")
    p.set_defaults(func=cmd_equiv, multi=False)
    return parser


def _run_one(func, args) -> tuple[int, str, str]:
    try:
        code, out = func(args)
        return code, out, ""
    except _Usage as exc:
        return USAGE, "", str(exc)
    except FlexError as exc:
        return USAGE, "", f"{type(exc).__name__}: {exc}"


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.multi:
        jobs = [argparse.Namespace(**{**vars(args), "file": f}) for f in args.files]
        with ThreadPoolExecutor() as pool:
            results = list(pool.map(lambda a: _run_one(args.func, a), jobs))
    else:
        results = [_run_one(args.func, args)]
    many = len(results) > 1
    merged = {}
    for job_args, (code, out, err) in zip(jobs if args.multi else [args], results):
        if out and many and args.format == "json":
            merged[job_args.file] = json.loads(out)
        elif out:
            print(f"{job_args.file}: {out}" if many else out)
        if err:
            print(err, file=sys.stderr)
    if merged:
        print(json.dumps(merged, indent=2, ensure_ascii=False))
    return max(code for code, _, _ in results)


if __name__ == "__main__":
    sys.exit(main())

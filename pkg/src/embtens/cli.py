"""Command-line front end.

Reports are byte-deterministic for a fixed workspace and command: all
iteration orders are fixed by the workspace file and the package's
basis conventions, and JSON is emitted with sorted keys.  Exit codes:
0 pass, 1 fail (with a report), 2 usage or parse errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import deformations as defs
from . import graded
from . import tensors
from .algebras import check_leibniz, check_lie, quotient_lie
from .cohomology import class_equals, cohomology
from .leibniz_lie import (
    check_leibniz_lie,
    induced_leibniz_lie,
    left_multiplication_tensor,
    subadjacent,
)
from .errors import (
    DegreeOutOfRange,
    ParseError,
    ToolkitError,
    UnresolvedReference,
    WorkspaceError,
)
from .linalg import Matrix, parse_scalar
from .reports import CheckReport
from .workspace import (
    Workspace,
    algebra_to_json,
    leibniz_lie_to_json,
    load_workspace,
    matrix_to_json,
    tensor_to_json,
)

CHECK_KINDS = ("lie", "leibniz", "action", "net", "leibniz-lie", "nijenhuis",
               "nijenhuis-operator", "deform", "equivalence")
BUILD_KINDS = ("hemisemidirect", "descendent", "subadjacent", "induced-triangle",
               "projection-net", "ell-net", "quotient-lie")
MC_KINDS = ("net", "deform")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--workspace", metavar="PATH", help="workspace JSON file")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", metavar="PATH",
                        help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="embtens",
        description="verify and build structures over structure-constant algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    def refs(p: argparse.ArgumentParser) -> None:
        p.add_argument("--algebra", help="algebra name")
        p.add_argument("--action", help="action name")
        p.add_argument("--tensor", help="tensor name")
        p.add_argument("--name", help="leibnizLie entry name")
        p.add_argument("--direction", help="tensor name whose matrix is the direction")
        p.add_argument("--direction2", help="second direction tensor name")
        p.add_argument("--element", help="comma-separated source coordinates")
        p.add_argument("--element2", help="second element")
        p.add_argument("--operator", help="matrix rows 'a,b;c,d'")

    p = sub.add_parser("check", parents=[common], help="run a verification")
    p.add_argument("what", choices=CHECK_KINDS)
    refs(p)

    p = sub.add_parser("build", parents=[common],
                       help="run a construction and emit the result")
    p.add_argument("what", choices=BUILD_KINDS)
    refs(p)

    p = sub.add_parser("mc", parents=[common], help="Maurer-Cartan style checks")
    p.add_argument("what", choices=MC_KINDS)
    refs(p)

    p = sub.add_parser("cohomology", parents=[common],
                       help="cocycles, coboundaries and their quotient")
    p.add_argument("--tensor", required=True)
    p.add_argument("--degree", type=int, required=True)

    p = sub.add_parser("class-equals", parents=[common],
                       help="compare two cocycles up to coboundaries")
    p.add_argument("--degree", type=int, required=True)
    refs(p)
    return parser


class _Usage(Exception):
    pass


def _need(args, attr: str, flag: str):
    value = getattr(args, attr)
    if value is None:
        raise _Usage(f"--{flag} is required for this command")
    return value


def _parse_element(text: str, dim: int, what: str) -> tuple:
    parts = [p.strip() for p in text.split(",")] if text.strip() else []
    if len(parts) != dim:
        raise _Usage(f"{what}: expected {dim} comma-separated coordinates")
    try:
        return tuple(parse_scalar(p) for p in parts)
    except ParseError as exc:
        raise _Usage(f"{what}: {exc}") from exc


def _parse_operator(text: str, dim: int) -> Matrix:
    rows = [r for r in (part.strip() for part in text.split(";")) if r]
    if len(rows) != dim:
        raise _Usage(f"--operator: expected {dim} rows separated by ';'")
    return Matrix.from_rows([_parse_element(r, dim, "--operator row") for r in rows])


def _direction(ws: Workspace, base, name: str) -> defs.DeformationDirection:
    other = ws.tensor(name)
    if other.action != base.action:
        raise _Usage(f"direction tensor {name!r} lives over a different action")
    return defs.DeformationDirection(base, other.matrix)


def _equivalence_over_candidates(d1, d2, spec_text: str, dim: int):
    """Try each ';'-separated witness candidate; no searching beyond the list."""
    candidates = [c for c in (part.strip() for part in spec_text.split(";")) if c]
    if not candidates:
        raise _Usage("--element: at least one candidate witness is required")
    first_failure = None
    for raw in candidates:
        x = _parse_element(raw, dim, "--element candidate")
        report = defs.check_equivalence(d1, d2, x)
        if report.ok:
            notes = report.notes + (f"witness: {raw}",)
            return CheckReport(report.check, True, report.failures, notes)
        if first_failure is None:
            first_failure = report
    notes = first_failure.notes + (f"no witness among {len(candidates)} candidates",)
    return CheckReport(first_failure.check, False, first_failure.failures, notes)


def _run_check(ws: Workspace, args) -> tuple[int, dict, str]:
    what = args.what
    if what == "lie":
        subject = _need(args, "algebra", "algebra")
        report = check_lie(ws.algebra(subject))
    elif what == "leibniz":
        subject = _need(args, "algebra", "algebra")
        report = check_leibniz(ws.algebra(subject))
    elif what == "action":
        subject = _need(args, "action", "action")
        report = tensors.check_coherent_action(ws.action(subject))
    elif what == "net":
        subject = _need(args, "tensor", "tensor")
        report = tensors.check_embedding_tensor(ws.tensor(subject))
    elif what == "leibniz-lie":
        subject = _need(args, "name", "name")
        report = check_leibniz_lie(ws.leibniz_lie_structure(subject))
    elif what == "nijenhuis":
        subject = _need(args, "tensor", "tensor")
        t = ws.tensor(subject)
        x = _parse_element(_need(args, "element", "element"), t.action.source.dim, "--element")
        report = defs.check_nijenhuis_element(defs.NijenhuisCandidate(t, x))
    elif what == "nijenhuis-operator":
        if args.tensor is not None:
            subject = args.tensor
            t = ws.tensor(subject)
            x = _parse_element(_need(args, "element", "element"),
                               t.action.source.dim, "--element")
            report = defs.check_nijenhuis_operator(tensors.descendent(t), t.action.of(x))
        else:
            subject = _need(args, "algebra", "algebra")
            a = ws.algebra(subject)
            op = _parse_operator(_need(args, "operator", "operator"), a.dim)
            report = defs.check_nijenhuis_operator(a, op)
    elif what == "deform":
        subject = _need(args, "tensor", "tensor")
        t = ws.tensor(subject)
        report = defs.check_linear_deformation(
            _direction(ws, t, _need(args, "direction", "direction")))
    elif what == "equivalence":
        subject = _need(args, "tensor", "tensor")
        t = ws.tensor(subject)
        d1 = _direction(ws, t, _need(args, "direction", "direction"))
        d2 = _direction(ws, t, _need(args, "direction2", "direction2"))
        report = _equivalence_over_candidates(
            d1, d2, _need(args, "element", "element"), t.action.source.dim)
    else:  # pragma: no cover
        raise _Usage(f"unknown check {what!r}")
    return _report_result(f"check {what}", subject, report)


def _run_build(ws: Workspace, args) -> tuple[int, dict, str]:
    what = args.what
    if what == "hemisemidirect":
        subject = _need(args, "action", "action")
        result = algebra_to_json(tensors.hemisemidirect(ws.action(subject)))
        line = _algebra_line(result)
    elif what == "descendent":
        subject = _need(args, "tensor", "tensor")
        result = algebra_to_json(tensors.descendent(ws.tensor(subject)))
        line = _algebra_line(result)
    elif what == "subadjacent":
        subject = _need(args, "name", "name")
        result = algebra_to_json(subadjacent(ws.leibniz_lie_structure(subject)))
        line = _algebra_line(result)
    elif what == "induced-triangle":
        subject = _need(args, "tensor", "tensor")
        result = leibniz_lie_to_json(induced_leibniz_lie(ws.tensor(subject)))
        line = f"leibniz-lie structure on {result['lie']['name']}"
    elif what == "projection-net":
        subject = _need(args, "algebra", "algebra")
        result = tensor_to_json(tensors.projection_tensor(ws.algebra(subject)))
        line = _tensor_line(result)
    elif what == "ell-net":
        subject = _need(args, "name", "name")
        result = tensor_to_json(left_multiplication_tensor(ws.leibniz_lie_structure(subject)))
        line = _tensor_line(result)
    elif what == "quotient-lie":
        subject = _need(args, "algebra", "algebra")
        algebra, projection = quotient_lie(ws.algebra(subject))
        result = {"algebra": algebra_to_json(algebra),
                  "projection": matrix_to_json(projection)}
        line = _algebra_line(result["algebra"]) + " with projection"
    else:  # pragma: no cover
        raise _Usage(f"unknown construction {what!r}")
    payload = {"command": f"build {what}", "subject": subject, "object": result}
    return 0, payload, f"build {what} {subject}: {line}"


def _algebra_line(data: dict) -> str:
    return f"algebra {data['name']} (dim {data['dim']}, flavor {data['flavor']})"


def _tensor_line(data: dict) -> str:
    src = data["action"]["source"]
    tgt = data["action"]["target"]
    return f"tensor {tgt['name']} -> {src['name']} ({src['dim']}x{tgt['dim']})"


def _run_mc(ws: Workspace, args) -> tuple[int, dict, str]:
    what = args.what
    subject = _need(args, "tensor", "tensor")
    t = ws.tensor(subject)
    cap = ws.settings.arity_cap
    if what == "net":
        report = graded.mc_check_tensor(t, arity_cap=cap)
    else:
        d = _direction(ws, t, _need(args, "direction", "direction"))
        report = graded.mc_check_deformation(t, d.direction, arity_cap=cap)
    return _report_result(f"mc {what}", subject, report)


def _run_cohomology(ws: Workspace, args) -> tuple[int, dict, str]:
    t = ws.tensor(args.tensor)
    report = cohomology(t, args.degree, max_degree=ws.settings.max_degree)
    payload = {"command": "cohomology", "subject": args.tensor,
               "degree": args.degree, "report": report.to_json()}
    line = (f"cohomology {args.tensor} degree {args.degree}: "
            f"dimZ={report.dim_z} dimB={report.dim_b} dimH={report.dim_h}")
    return 0, payload, line


def _run_class_equals(ws: Workspace, args) -> tuple[int, dict, str]:
    subject = _need(args, "tensor", "tensor")
    t = ws.tensor(subject)
    k = args.degree
    if args.element is not None or args.element2 is not None:
        dim = t.action.source.dim
        f = _parse_element(_need(args, "element", "element"), dim, "--element")
        g = _parse_element(_need(args, "element2", "element2"), dim, "--element2")
    else:
        f = _direction(ws, t, _need(args, "direction", "direction")).direction
        g = _direction(ws, t, _need(args, "direction2", "direction2")).direction
    equal = class_equals(t, f, g, k, max_degree=ws.settings.max_degree)
    payload = {"command": "class-equals", "subject": subject, "degree": k, "equal": equal}
    line = f"class-equals {subject} degree {k}: {'EQUAL' if equal else 'DIFFERENT'}"
    return (0 if equal else 1), payload, line


def _report_result(command: str, subject: str, report: CheckReport) -> tuple[int, dict, str]:
    payload = {"command": command, "subject": subject, "ok": report.ok,
               "report": report.to_json()}
    lines = [f"{command} {subject}: {'PASS' if report.ok else 'FAIL'}"]
    for f in report.failures:
        where = ",".join(str(i) for i in f.where)
        lines.append(f"  {f.law} at ({where})")
    for note in report.notes:
        lines.append(f"  note: {note}")
    return (0 if report.ok else 1), payload, "\n".join(lines)


def run(argv) -> tuple[int, str]:
    """Execute one command line; returns (exit code, rendered output)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else 2), ""
    try:
        if args.workspace is None:
            raise _Usage("--workspace PATH is required")
        ws = load_workspace(args.workspace)
        if args.command == "check":
            code, payload, text = _run_check(ws, args)
        elif args.command == "build":
            code, payload, text = _run_build(ws, args)
        elif args.command == "mc":
            code, payload, text = _run_mc(ws, args)
        elif args.command == "cohomology":
            code, payload, text = _run_cohomology(ws, args)
        else:
            code, payload, text = _run_class_equals(ws, args)
    except (_Usage, WorkspaceError, UnresolvedReference, DegreeOutOfRange, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2, ""
    except ToolkitError as exc:
        payload = {"command": args.command, "error": str(exc), "ok": False}
        rendered = _render(payload, f"{args.command}: ERROR {exc}", args.format)
        _emit(rendered, args.output)
        return 1, rendered
    rendered = _render(payload, text, args.format)
    _emit(rendered, args.output)
    return code, rendered


def _render(payload: dict, text: str, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    return text + "\n"


def _emit(rendered: str, output: str | None) -> None:
    if output:
        Path(output).write_text(rendered, encoding="utf-8")
    else:
        sys.stdout.write(rendered)


def main(argv=None) -> int:
    return run(list(sys.argv[1:]) if argv is None else list(argv))[0]


if __name__ == "__main__":
    sys.exit(main())

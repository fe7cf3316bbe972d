"""Command-line front end.

Exit status: 0 on success / PASS, 1 when a verification report FAILs,
2 on any input problem (unreadable file, schema mismatch, degenerate data).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import schemas
from .errors import BilliardError, ParseError
from .field import FieldSpec
from .leonard import (
    QRacahParams,
    border_correspondence,
    downarrow,
    leonard_report,
    qracah_eigenvalues,
    qracah_value,
    split_decomposition,
    split_report,
)
from .linalg import primitive_idempotents
from .polycba import (
    PolyCBA,
    black_clique_relation_check,
    bottom_border_check,
    build_poly_cba,
    closed_form_value,
    edge_label_check,
    edge_labels,
    projection_check,
    value_function,
    value_function_check,
    vanishing_check,
    verify_cba,
)
from .render import location_label, render_triangle
from .report import Check, Report
from .simplex import Location, locations

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class Outcome:
    def __init__(self, payload: dict, text: str, report: Report | None = None) -> None:
        self.payload = payload
        self.text = text
        self.report = report

    @property
    def status(self) -> int:
        if self.report is None or self.report.passed:
            return EXIT_OK
        return EXIT_FAIL


# -- input loading -------------------------------------------------------------


def _load(path: str) -> dict:
    obj = _load_any(path)
    if not isinstance(obj, dict):
        raise ParseError(f"{path} must hold a JSON object")
    return obj


def _reject_float(text: str):
    raise ParseError(f"floating-point literal {text} not allowed; write scalars as strings")


def _seed(args, field: FieldSpec, obj: dict):
    if args.seed_vector:
        raw = _load_any(args.seed_vector)
        if isinstance(raw, dict):
            raw = raw.get("seed", raw.get("v"))
        return schemas.vector(raw, field)
    if "seed" in obj:
        return schemas.vector(obj["seed"], field)
    return None


def _load_any(path: str):
    try:
        return json.loads(Path(path).read_text(), parse_float=_reject_float)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from None


def _array_source(args, obj: dict) -> PolyCBA:
    """Either a stored array or a matrix file to build one from."""
    field = schemas.resolve_field(obj, args.field)
    if "array" in obj:
        schemas.require(obj, schemas.ARRAY_KEYS, "array file")
        obj = dict(obj, field=field.to_json())
        return PolyCBA.from_json(obj)
    schemas.require(obj, schemas.MATRIX_KEYS, "matrix file")
    eig = primitive_idempotents(schemas.matrix(obj["A"], field), schemas.scalars(obj["theta"], field))
    return build_poly_cba(eig, _seed(args, field, obj))


def _leonard(args, obj: dict):
    schemas.require(obj, schemas.LEONARD_KEYS, "leonard-system file")
    field = schemas.resolve_field(obj, args.field)
    parts = (
        schemas.matrix(obj["A"], field),
        schemas.scalars(obj["theta"], field),
        schemas.matrix(obj["Astar"], field),
        schemas.scalars(obj["theta_star"], field),
    )
    return field, leonard_report(*parts)


def _vec(v) -> str:
    return "(" + ",".join(str(x) for x in v.raw) + ")"


def _vector_cell(cba: PolyCBA):
    return lambda loc: _vec(cba.array[loc])


# -- verbs ---------------------------------------------------------------------


def cmd_build(args, obj) -> Outcome:
    if "array" in obj:
        raise ParseError("build expects a matrix file (A, theta), not an array file")
    cba = _array_source(args, obj)
    return Outcome(cba.to_json(), render_triangle(cba.d, _vector_cell(cba)))


def cmd_verify(args, obj) -> Outcome:
    cba = _array_source(args, obj)
    rep = verify_cba(cba)
    if args.all:
        rep.title = "full verification"
        rep.extend(edge_label_check(cba, edge_labels(cba)))
        rep.extend(value_function_check(cba))
        rep.extend(vanishing_check(cba.theta))
        if cba.eig is not None:
            rep.extend(black_clique_relation_check(cba))
            rep.extend(bottom_border_check(cba))
            if cba.seed is not None:
                rep.extend(projection_check(cba))
    return Outcome({"report": rep.to_json()}, rep.to_text(), rep)


def cmd_labels(args, obj) -> Outcome:
    cba = _array_source(args, obj)
    labels = edge_labels(cba)
    rep = edge_label_check(cba, labels)
    lines = [f"{a} -> {b}: {x}" for (a, b), x in sorted(labels.labels.items())]
    return Outcome({"labels": labels.to_json(), "report": rep.to_json()}, "\n".join(lines + [rep.to_text()]), rep)


def cmd_values(args, obj) -> Outcome:
    cba = _array_source(args, obj)
    if cba.d < 2:
        raise ParseError("the value function needs diameter at least 2")
    vf = value_function(edge_labels(cba))
    rep = value_function_check(cba)
    closed = [{"loc": list(loc), "value": str(closed_form_value(cba.theta, loc))} for loc in locations(cba.d - 2)]
    text = render_triangle(cba.d - 2, lambda loc: str(vf[loc])) + "\n" + rep.to_text()
    return Outcome({"values": vf.to_json(), "closed_form": closed, "report": rep.to_json()}, text, rep)


def cmd_leonard_verify(args, obj) -> Outcome:
    _, (rep, _) = _leonard(args, obj)
    return Outcome({"report": rep.to_json()}, rep.to_text(), rep)


def cmd_leonard_split(args, obj) -> Outcome:
    _, (rep, ls) = _leonard(args, obj)
    if ls is None:
        return Outcome({"report": rep.to_json()}, rep.to_text(), rep)
    rep.title = "leonard system and split decompositions"
    up = split_decomposition(ls)
    down = split_decomposition(downarrow(ls))
    rep.extend(split_report(ls, up))
    dn = split_report(downarrow(ls), down)
    rep.checks.extend(Check(c.check + "-down", c.subject, c.passed, c.detail) for c in dn.checks)
    text = "\n".join(
        [f"U_{i}: {_vec(u)}" for i, u in enumerate(up.spanners)]
        + [f"U^down_{i}: {_vec(u)}" for i, u in enumerate(down.spanners)]
        + [rep.to_text()]
    )
    return Outcome({"split": up.to_json(), "split_down": down.to_json(), "report": rep.to_json()}, text, rep)


def cmd_leonard_borders(args, obj) -> Outcome:
    field, (rep, ls) = _leonard(args, obj)
    if ls is not None:
        rep.title = "leonard system and border correspondence"
        rep.extend(border_correspondence(ls, _seed(args, field, obj)))
    return Outcome({"report": rep.to_json()}, rep.to_text(), rep)


def cmd_qracah(args, obj) -> Outcome:
    schemas.require(obj, schemas.QRACAH_KEYS, "q-Racah parameter file")
    field = schemas.resolve_field(obj, args.field)
    if isinstance(obj["d"], bool) or not isinstance(obj["d"], int):
        raise ParseError("d must be an integer")
    params = QRacahParams(*(schemas.scalar(obj[k], field) for k in "qabc"), obj["d"])
    theta = qracah_eigenvalues(params)
    rep = Report("q-Racah value function")
    values = []
    for loc in locations(params.d - 2) if params.d >= 2 else []:
        x, y = qracah_value(params, loc), closed_form_value(theta, loc)
        rep.add("qracah-value", str(loc), x == y, f"{x} vs {y}")
        values.append({"loc": list(loc), "value": str(x)})
    payload = {"params": params.to_json(), "theta": [str(t) for t in theta], "values": values, "report": rep.to_json()}
    text = "theta: " + ", ".join(str(t) for t in theta)
    if params.d >= 2:
        text += "\n" + render_triangle(params.d - 2, lambda loc: str(qracah_value(params, loc)))
    return Outcome(payload, text + "\n" + rep.to_text(), rep)


def cmd_render(args, obj) -> Outcome:
    show = args.show
    if set(obj) <= {"d", "field"}:
        d = obj.get("d")
        if isinstance(d, bool) or not isinstance(d, int) or d < 0:
            raise ParseError("d must be a nonnegative integer")
        if show not in (None, "locations"):
            raise ParseError(f"cannot show {show} without an array or matrix")
        cell, dd = location_label, d
    else:
        cba = _array_source(args, obj)
        show = show or "vectors"
        if show == "locations":
            cell, dd = location_label, cba.d
        elif show == "vectors":
            cell, dd = _vector_cell(cba), cba.d
        else:
            if cba.d < 2:
                raise ParseError("the value function needs diameter at least 2")
            vf = value_function(edge_labels(cba))
            cell, dd = (lambda loc: str(vf[loc])), cba.d - 2
    text = render_triangle(dd, cell)
    rows = [[cell(Location(k - t, dd - k, t)) for t in range(k + 1)] for k in range(dd + 1)]
    return Outcome({"d": dd, "rows": rows}, text)


VERBS = {
    "build": cmd_build,
    "verify": cmd_verify,
    "labels": cmd_labels,
    "values": cmd_values,
    "leonard-verify": cmd_leonard_verify,
    "leonard-split": cmd_leonard_split,
    "leonard-borders": cmd_leonard_borders,
    "qracah": cmd_qracah,
    "render": cmd_render,
}


def _field_flag(text: str) -> FieldSpec:
    try:
        return FieldSpec.from_flag(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="JSON input file")
    common.add_argument("--field", type=_field_flag, default=None, help="rational | gfp:<p>")
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--seed-vector", help="JSON file holding an explicit seed vector v")

    parser = argparse.ArgumentParser(prog="billiard", description="Concrete Billiard Arrays of polynomial type")
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb in VERBS:
        p = sub.add_parser(verb, parents=[common])
        if verb == "verify":
            p.add_argument("--all", action="store_true", help="also run the label, value and identity checks")
        if verb == "render":
            p.add_argument("--show", choices=("locations", "vectors", "values"))
    return parser


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        outcome = VERBS[args.verb](args, _load(args.input))
    except (BilliardError, ZeroDivisionError) as exc:
        msg = f"{type(exc).__name__}: {exc}"
        print(f"error: {msg}", file=stderr)
        if args.format == "json":
            print(json.dumps({"command": args.verb, "error": str(exc), "type": type(exc).__name__}), file=stdout)
        return EXIT_INPUT
    if args.format == "json":
        body = dict(outcome.payload, command=args.verb)
        if outcome.report is not None:
            body["verdict"] = outcome.report.verdict
        text = json.dumps(body, indent=2)
    else:
        text = outcome.text
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text, file=stdout)
    return outcome.status


def main() -> None:
    sys.exit(run())

"""Command-line front end: every subcommand reads exact JSON or rational flags and writes canonical JSON.

Exit codes: 0 success, 1 malformed input, 2 negative verdict, 3 indeterminate.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from .appendix import ALIASES, FOUR, THREE, run_appendix
from .certify import DEFAULT_GRID_DEPTH, INDETERMINATE, REFUTED, certify_family, certify_form, check_reducible_extremal
from .classify import classify_form
from .families import FAMILY_IDS, PROVENANCE, build_family, in_psd_region, verify_family_identities
from .geometry import boundary_zeros, classify_singularity, count_N, curve_points, find_singular_points
from .lift import lift_with_orbits, reducible_lift_report, verify_lift_extremal
from .linsys import conditions_from_json, verify_unique
from .poly import Form, format_point
from .scalar import format_rational, parse_rational

OK, MALFORMED, NEGATIVE, UNDECIDED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse whose usage errors surface as UsageError (exit code 1) instead of exiting with 2."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def _point(text: str) -> tuple[Fraction, ...]:
    parts = text.replace(",", ":").split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected a:b:c, got {text!r}")
    P = tuple(_rational(p) for p in parts)
    if not any(P):
        raise argparse.ArgumentTypeError("the zero vector is not a projective point")
    return P


# ----------------------------------------------------------------------------
# input


def _read_json(args) -> Any:
    if args.json is not None:
        text = args.json
    elif args.input is not None and args.input != "-":
        text = Path(args.input).read_text()
    else:
        text = sys.stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {exc}") from exc


def _family_params(args) -> tuple:
    fam = args.id
    if fam == "f":
        need = ("p", "q", "r")
    elif fam in ("g", "h"):
        need = ("p", "q")
    elif fam == "fs":
        need = ("s",)
    elif fam == "edge_square":
        if args.coord is None:
            raise UsageError("edge_square needs --coord")
        return (args.coord, *(_need(args, k) for k in ("a", "b", "c")))
    else:
        need = ()
    return tuple(_need(args, k) for k in need)


def _need(args, key: str) -> Fraction:
    v = getattr(args, key)
    if v is None:
        raise UsageError(f"family {args.id} needs --{key}")
    return v


def _form_from_args(args) -> Form:
    if getattr(args, "id", None) is not None:
        return build_family(args.id, _family_params(args))
    obj = _read_json(args)
    if isinstance(obj, dict) and "form" in obj:
        obj = obj["form"]
    try:
        return Form.from_json(obj)
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed form JSON: {exc}") from exc


def _cubic_from_args(args) -> Form:
    f = _form_from_args(args)
    if f.is_zero() or f.degree != 3:
        raise UsageError("expected a nonzero ternary cubic")
    return f


# ----------------------------------------------------------------------------
# subcommands; each returns (exit code, payload)


def cmd_family(args):
    if args.id is None:
        raise UsageError("family needs --id")
    params = _family_params(args)
    f = build_family(args.id, params)
    return OK, {
        "family": args.id,
        "params": [format_rational(p) for p in params],
        "description": PROVENANCE[args.id],
        "in_psd_region": in_psd_region(args.id, params),
        "form": f.to_json(),
        "text": f.to_text(),
    }


def cmd_identities(args):
    rep = verify_family_identities(samples=args.samples, seed=args.seed)
    return (OK if rep.passed else NEGATIVE), rep.to_json()


def cmd_verify_extremal(args):
    obj = _read_json(args)
    try:
        conds = conditions_from_json(obj["conditions"])
        degree = int(obj["degree"])
        expected = Form.from_json(obj["expected"]) if obj.get("expected") is not None else None
    except (KeyError, TypeError) as exc:
        raise UsageError(f"condition file needs 'degree' and 'conditions': {exc}") from exc
    res = verify_unique(conds, degree, expected)
    out = res.to_json()
    if res.dimension == 1:
        out["kernel"] = Form.from_vector(degree, res.kernel.basis[0]).to_json()
    ok = res.dimension == 1 and (expected is None or res.match)
    return (OK if ok else NEGATIVE), out


def cmd_certify(args):
    if args.id in ("f", "g", "h"):
        out = certify_family(args.id, _family_params(args))
    else:
        out = certify_form(_form_from_args(args), depth=args.grid_depth)
    code = {REFUTED: NEGATIVE, INDETERMINATE: UNDECIDED}.get(out.verdict, OK)
    payload = out.to_json()
    payload["machine_checked"] = out.machine_checked
    return code, payload


def cmd_zeros(args):
    f = _cubic_from_args(args)
    inv = boundary_zeros(f)
    n = count_N(inv)
    out = {"zeros": inv.to_json(), "singular": [s.to_json() for s in inv.singular], "count": n.to_json()}
    if args.emit_points:
        P = next((s.point for s in inv.singular if s.point is not None), None)
        if P is None:
            out["curve_points"] = []
        else:
            out["curve_points"] = [format_point(Q) for Q in curve_points(f, P, args.emit_points)]
    return (OK if n.complete else UNDECIDED), out


def cmd_classify_singularity(args):
    f = _cubic_from_args(args)
    if args.point is None:
        reps = find_singular_points(f)
    else:
        reps = [classify_singularity(f, args.point)]
    return OK, {"singular_points": [r.to_json() for r in reps]}


def cmd_classify(args):
    res = classify_form(_cubic_from_args(args))
    code = {"not_extremal": NEGATIVE, "indeterminate": UNDECIDED}.get(res.verdict, OK)
    return code, res.to_json()


def cmd_lift(args):
    f = _cubic_from_args(args)
    rc = check_reducible_extremal(f)
    if rc.case == 6:
        rep = reducible_lift_report(f, None, None, monomial=True)
    elif rc.case == 5:
        rep = reducible_lift_report(f, rc.coordinate, rc.line)
    else:
        try:
            rep = lift_with_orbits(f)
        except ValueError as exc:
            return UNDECIDED, {"verdict": "indeterminate", "reason": str(exc)}
    out = rep.to_json()
    if not args.verify_extremal:
        return OK, out
    if not rep.complete:
        out["verdict"] = "indeterminate"
        return UNDECIDED, out
    kr, match = verify_lift_extremal(rep)
    out.update({"kernel_dim": kr.dimension, "rank": kr.rank, "shape": list(kr.shape), "match": match})
    out["verdict"] = "extremal" if match else "not_confirmed"
    return (OK if match else NEGATIVE), out


def cmd_appendix(args):
    cons = {"three": THREE, "four": FOUR, None: None}[args.constraints]
    res = run_appendix(args.theorem, cons)
    return (OK if res.passed else NEGATIVE), res.to_json()


# ----------------------------------------------------------------------------
# parser


def _add_io(p: argparse.ArgumentParser, form_input: bool = True):
    if form_input:
        p.add_argument("--input", metavar="PATH", help="JSON input file ('-' for stdin)")
        p.add_argument("--json", metavar="TEXT", help="inline JSON input")


def _add_family(p: argparse.ArgumentParser, ids: Sequence[str] = FAMILY_IDS):
    p.add_argument("--id", choices=ids)
    for k in ("p", "q", "r", "s", "a", "b", "c"):
        p.add_argument(f"--{k}", type=_rational)
    p.add_argument("--coord", type=int, choices=(0, 1, 2), help="coordinate index for edge_square")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=0, help="RNG seed for sampled checks")

    parser = _Parser(prog="psdcubic", description="Exact toolkit for extremal nonnegative ternary cubics.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("family", parents=[common], help="build a family member")
    _add_family(p)
    p.set_defaults(run=cmd_family)

    p = sub.add_parser("identities", parents=[common], help="check the algebraic identities at sampled parameters")
    p.add_argument("--samples", type=int, default=20)
    p.set_defaults(run=cmd_identities)

    p = sub.add_parser("verify-extremal", parents=[common], help="kernel of a zero-condition system")
    _add_io(p)
    p.set_defaults(run=cmd_verify_extremal)

    p = sub.add_parser("certify", parents=[common], help="certify or refute nonnegativity on the octant")
    _add_io(p)
    _add_family(p)
    p.add_argument("--grid-depth", type=int, default=DEFAULT_GRID_DEPTH)
    p.set_defaults(run=cmd_certify)

    p = sub.add_parser("zeros", parents=[common], help="octant zeros and weighted zero count")
    _add_io(p)
    _add_family(p)
    p.add_argument("--emit-points", type=int, default=0, metavar="N", help="also dump N rational curve points")
    p.set_defaults(run=cmd_zeros)

    p = sub.add_parser("classify-singularity", parents=[common], help="locate or classify singular points")
    _add_io(p)
    _add_family(p)
    p.add_argument("--point", type=_point, help="a:b:c; default finds all singular points")
    p.set_defaults(run=cmd_classify_singularity)

    p = sub.add_parser("classify", parents=[common], help="decide the extremal class of a cubic")
    _add_io(p)
    _add_family(p)
    p.set_defaults(run=cmd_classify)

    p = sub.add_parser("lift", parents=[common], help="square-substitution lift and its zero orbits")
    _add_io(p)
    _add_family(p)
    p.add_argument("--verify-extremal", action="store_true")
    p.set_defaults(run=cmd_lift)

    p = sub.add_parser("appendix", parents=[common], help="verify the quartic and quintic lift examples")
    p.add_argument("--theorem", required=True, choices=sorted(ALIASES))
    p.add_argument("--constraints", choices=("three", "four"), help="derivative set per point (default per example)")
    p.set_defaults(run=cmd_appendix)
    return parser


# ----------------------------------------------------------------------------
# output


def _flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _text_lines(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k in sorted(obj):
            v = obj[k]
            if _flat(v) and v:
                lines.append(f"{pad}{k}: [{', '.join(_scalar_text(x) for x in v)}]")
            elif isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_text_lines(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar_text(v)}")
        return lines
    if isinstance(obj, list):
        lines = []
        for v in obj:
            if _flat(v) and v:
                lines.append(f"{pad}- [{', '.join(_scalar_text(x) for x in v)}]")
            elif isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}-")
                lines.extend(_text_lines(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar_text(v)}")
        return lines
    return [pad + _scalar_text(obj)]


def _scalar_text(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if v == [] or v == {}:
        return "[]" if v == [] else "{}"
    return str(v)


def render(payload, fmt: str = "json") -> str:
    if fmt == "text":
        return "\n".join(_text_lines(payload))
    return json.dumps(payload, sort_keys=True, indent=2)


def run(argv: Sequence[str] | None = None) -> tuple[int, str]:
    """Parse and execute; returns (exit code, rendered output).  Errors render as {"error": ...}."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return MALFORMED, render({"error": str(exc)}, "json")
    try:
        code, payload = args.run(args)
    except (UsageError, ValueError, ZeroDivisionError, OSError) as exc:
        return MALFORMED, render({"error": str(exc)}, args.format)
    return code, render(payload, args.format)


def main(argv: Sequence[str] | None = None) -> int:
    code, out = run(argv)
    stream = sys.stderr if code == MALFORMED else sys.stdout
    print(out, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())

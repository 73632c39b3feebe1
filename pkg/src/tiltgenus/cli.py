"""Command-line front end.

Exit codes: 0 certified or conclusive, 1 inconclusive or failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction
from typing import Sequence

from .bounds import genus_bound, hom_vanishing_witness, speciality_threshold
from .certify import CurveInput, certify_semistable_line, critical_beta, oracle_crosscheck
from .exactnum import QuadNum, parse_quad
from .tilt import TiltPoint
from .walls import wall_expression, wall_family

DEFAULT_ALPHAS = "1/2,1,3"


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _theta_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(part) for part in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty theta range {text!r}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS so a subcommand's unset flag does not clobber a global one
    common.add_argument("--format", choices=("json", "csv", "svg"), default=argparse.SUPPRESS)
    common.add_argument("--out", metavar="PATH", default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="tiltgenus",
        description="Tilt-stability data and genus bounds for integral space curves.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", parents=[common], help="arithmetic genus bound")
    p.add_argument("--d", type=_positive_int, required=True)
    p.add_argument("--k", type=_positive_int, required=True)

    for name, help_text in (
        ("certify", "certify semistability of I_C along beta0"),
        ("oracle", "brute-force destabilizer search along beta0"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--d", type=_positive_int, required=True)
        p.add_argument("--k", type=_positive_int, required=True)
        p.add_argument("--alphas", default=DEFAULT_ALPHAS)
        p.add_argument("--rank-cap", type=_positive_int, default=2)
        p.add_argument("--workers", type=_positive_int, default=1)
    p.add_argument("--beta", default=None, help="probe another vertical line instead of beta0")

    p = sub.add_parser("walls", parents=[common], help="numerical walls of I_C")
    p.add_argument("--d", type=_positive_int, required=True)
    p.add_argument("--k", type=_positive_int, default=None,
                   help="mark beta0 and evaluate signs on it (default beta = -2*sqrt(d))")
    p.add_argument("--rank-cap", type=_positive_int, default=1)
    p.add_argument("--theta-range", type=_theta_range, default=None, metavar="LO:HI")
    p.add_argument("--alpha", default="1")

    p = sub.add_parser("speciality", parents=[common], help="h^1(O_C(l)) vanishing")
    p.add_argument("--d", type=_positive_int, required=True)
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--l", type=int, required=True)

    p = sub.add_parser("qcheck", parents=[common], help="quick exact self-check for (d, k)")
    p.add_argument("--d", type=_positive_int, required=True)
    p.add_argument("--k", type=_positive_int, required=True)
    return parser


def _alphas(parser: argparse.ArgumentParser, text: str, d: int) -> list[QuadNum]:
    try:
        values = [parse_quad(part, d) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        parser.error(str(exc))
    if not values or any(a.sign() <= 0 for a in values):
        parser.error(f"alphas must be positive, got {text!r}")
    return values


def _json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _csv(header: Sequence[str], rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _check_format(parser, args, allowed: tuple[str, ...]) -> str:
    fmt = args.format or allowed[0]
    if fmt not in allowed:
        parser.error(f"{args.command} does not support --format {fmt}")
    return fmt


def cmd_bound(parser, args) -> int:
    fmt = _check_format(parser, args, ("json", "csv"))
    report = genus_bound(args.d, args.k).as_dict()
    if fmt == "json":
        _emit(_json(report), args.out)
    else:
        header = sorted(report)
        _emit(_csv(header, [[report[h] for h in header]]), args.out)
    return 0


def cmd_certify(parser, args) -> int:
    fmt = _check_format(parser, args, ("json", "csv"))
    curve = CurveInput(args.d, args.k)
    cert = certify_semistable_line(curve)
    oracle = oracle_crosscheck(
        curve, _alphas(parser, args.alphas, args.d), args.rank_cap, workers=args.workers
    )
    if fmt == "json":
        _emit(_json({"certificate": cert.as_dict(), "oracle": oracle.as_dict()}), args.out)
    else:
        rows = [[c.l, c.branch, str(c.margin), c.verdict] for c in cert.cases]
        _emit(_csv(["l", "branch", "margin", "verdict"], rows), args.out)
    ok = cert.overall and oracle.ok
    if not ok:
        for case in cert.failures:
            print(f"failed case: l={case.l} {case.branch} margin={case.margin}", file=sys.stderr)
        for alpha, s in oracle.violations:
            print(f"destabilizer at alpha={alpha}: {s.candidate}", file=sys.stderr)
    return 0 if ok else 1


def cmd_oracle(parser, args) -> int:
    fmt = _check_format(parser, args, ("json", "csv"))
    curve = CurveInput(args.d, args.k)
    beta = None
    if args.beta is not None:
        try:
            beta = parse_quad(args.beta, args.d)
        except ValueError as exc:
            parser.error(str(exc))
        if beta.sign() >= 0:
            parser.error("beta must be negative")
    report = oracle_crosscheck(
        curve,
        _alphas(parser, args.alphas, args.d),
        args.rank_cap,
        beta=beta,
        workers=args.workers,
    )
    if fmt == "json":
        _emit(_json(report.as_dict()), args.out)
    else:
        rows = []
        for kind, items in (("destabilizer", report.violations), ("contact", report.contacts)):
            for alpha, s in items:
                c = s.candidate
                rows.append([str(alpha), c.r, c.theta, c.two_c, str(s.expression), kind])
        _emit(_csv(["alpha", "r", "theta", "two_c", "expression", "kind"], rows), args.out)
    return 0 if report.ok else 1


def _walls_svg(d: int, family, beta_line: QuadNum, marked: bool) -> str:
    lefts = [float(w.center_x) - math.sqrt(float(w.radius_sq)) for _, w in family]
    left = min(lefts + [float(beta_line), -1.0]) * 1.05
    tallest = max([math.sqrt(float(w.radius_sq)) for _, w in family] + [1.0]) * 1.1
    scale = 760.0 / -left
    width = 800
    height = int(tallest * scale) + 40
    base = height - 20

    def x(beta: float) -> float:
        return 20 + (beta - left) * scale

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{height}" data-d="{d}">',
        f'<title>Numerical walls of I_C, d = {d}</title>',
        f'<line x1="20" y1="{base}" x2="{width - 20}" y2="{base}" stroke="black" '
        'data-axis="beta"/>',
    ]
    for cand, wall in family:
        cx = float(wall.center_x)
        rad = math.sqrt(float(wall.radius_sq))
        x1, x2 = x(cx - rad), x(cx + rad)
        rpx = rad * scale
        lines.append(
            f'<path d="M {x1:.3f} {base} A {rpx:.3f} {rpx:.3f} 0 0 1 {x2:.3f} {base}" '
            f'fill="none" stroke="steelblue" data-r="{cand.r}" data-theta="{cand.theta}" '
            f'data-two-c="{cand.two_c}" data-center="{wall.center_x}" '
            f'data-radius-sq="{wall.radius_sq}"><title>center {wall.center_x}, '
            f'radius^2 {wall.radius_sq}</title></path>'
        )
    kind = "critical" if marked else "reference"
    bx = x(float(beta_line))
    lines.append(
        f'<line x1="{bx:.3f}" y1="{base}" x2="{bx:.3f}" y2="10" stroke="crimson" '
        f'stroke-dasharray="6 4" data-beta="{beta_line}" data-kind="{kind}">'
        f'<title>beta = {beta_line}</title></line>'
    )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def cmd_walls(parser, args) -> int:
    fmt = _check_format(parser, args, ("csv", "json", "svg"))
    d = args.d
    if args.theta_range is None:
        reach = max(1, math.ceil(2 * QuadNum.sqrt_of(d)))
        thetas = range(-reach, 0)
    else:
        thetas = range(args.theta_range[0], args.theta_range[1] + 1)
    try:
        alpha = parse_quad(args.alpha, d)
    except ValueError as exc:
        parser.error(str(exc))
    if alpha.sign() <= 0:
        parser.error("alpha must be positive")
    if args.k is not None:
        beta = critical_beta(CurveInput(d, args.k))
    else:
        beta = QuadNum(0, -2, d)
    point = TiltPoint(alpha, beta)
    family = wall_family(d, args.rank_cap, thetas)
    rows = [
        [
            cand.r,
            cand.theta,
            cand.two_c,
            str(wall.center_x),
            str(wall.radius_sq),
            wall_expression(cand, d, point).sign(),
        ]
        for cand, wall in family
    ]
    header = ["r", "theta", "two_c", "wall_center", "wall_radius_sq", "expression_sign"]
    if fmt == "csv":
        _emit(_csv(header, rows), args.out)
    elif fmt == "json":
        payload = {
            "alpha": str(alpha),
            "beta": str(beta),
            "d": d,
            "walls": [dict(zip(header, row)) for row in rows],
        }
        _emit(_json(payload), args.out)
    else:
        _emit(_walls_svg(d, family, beta, args.k is not None), args.out)
    return 0


def cmd_speciality(parser, args) -> int:
    fmt = _check_format(parser, args, ("json", "csv"))
    report = hom_vanishing_witness(args.d, args.k, args.l + 4).as_dict()
    if fmt == "json":
        _emit(_json(report), args.out)
    else:
        header = sorted(report)
        _emit(_csv(header, [["" if report[h] is None else report[h] for h in header]]), args.out)
    return 0 if report["conclusion"] else 1


def quick_checks(d: int, k: int) -> dict[str, bool]:
    """A handful of exact identities for one ``(d, k)``; all should hold."""
    from .bounds import bmt_identity_check, genus_bound_at
    from .walls import rank_bound

    curve = CurveInput(d, k)
    beta0 = critical_beta(curve)
    checks: dict[str, bool] = {}
    checks["certificate"] = certify_semistable_line(curve).overall
    checks["substitution"] = (
        genus_bound(d, k).raw_bound == genus_bound_at(d, TiltPoint(0, beta0))
    )
    checks["bmt_identity"] = all(
        bmt_identity_check(d, chi, TiltPoint(a, beta0))
        for chi in (-3 * d, 0, 1, 2 * d)
        for a in (0, Fraction(1, 2), 2)
    )
    # (alpha, beta) = (4/3, -2/3) * sqrt(d) lies on 2 alpha^2 + beta^2 = 4d
    on_conic = TiltPoint(QuadNum(0, Fraction(4, 3), d), QuadNum(0, Fraction(-2, 3), d))
    checks["rank_bound_boundary"] = rank_bound(on_conic, d) == 2
    m = math.floor(-beta0) + 1
    checks["speciality_witness"] = hom_vanishing_witness(d, k, m).conclusion
    checks["speciality_threshold"] = speciality_threshold(d, k) == -beta0 - 4
    return checks


def cmd_qcheck(parser, args) -> int:
    fmt = _check_format(parser, args, ("json", "csv"))
    checks = quick_checks(args.d, args.k)
    ok = all(checks.values())
    if fmt == "json":
        _emit(_json({"checks": checks, "d": args.d, "k": args.k, "ok": ok}), args.out)
    else:
        _emit(_csv(["check", "passed"], sorted(checks.items())), args.out)
    return 0 if ok else 1


COMMANDS = {
    "bound": cmd_bound,
    "certify": cmd_certify,
    "oracle": cmd_oracle,
    "walls": cmd_walls,
    "speciality": cmd_speciality,
    "qcheck": cmd_qcheck,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.format = getattr(args, "format", None)
    args.out = getattr(args, "out", None)
    return COMMANDS[args.command](parser, args)


if __name__ == "__main__":
    sys.exit(main())

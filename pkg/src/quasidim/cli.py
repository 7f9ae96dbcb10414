"""Command-line front end.

Exit status: 0 success, 1 parse/validation error, 2 guard rail exceeded.
"""

import argparse
import json
import sys

from .ehrhart import lambda_w, polytope_report
from .exactnum import format_rational
from .kolchin import SubsetExplosionError, dimension_quasipoly, exact_count_eval
from .latcount import (
    DEFAULT_CAP,
    EnumerationCapExceeded,
    PointSet,
    WeightVector,
    count_polytope,
    count_simplex,
    count_VA,
    count_VA_recursive,
)
from .polytope import HPolytope
from .sigma import (
    LinearSigmaPolynomial,
    Ranking,
    characteristic_set,
    dimension_quasipoly_system,
    sigma_trdeg,
    system_threshold,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def parse_weights(text):
    try:
        return WeightVector(tuple(int(x) for x in text.split(",")))
    except ValueError as exc:
        raise UsageError(f"bad --weights {text!r}: {exc}") from None


def parse_points(text, m):
    pts = []
    for chunk in filter(None, (c.strip() for c in text.split(";"))):
        try:
            pts.append(tuple(int(x) for x in chunk.split(",")))
        except ValueError:
            raise UsageError(f"bad point {chunk!r} in --points") from None
    try:
        return PointSet(m, tuple(pts))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def fmt_point(p):
    return "(" + ", ".join(format_rational(c) for c in p) + ")"


def fmt_points(ps):
    return "; ".join(fmt_point(p) for p in ps) if len(ps) else "(empty)"


def valid_line(qp, threshold):
    return f"{qp.format()} (valid for t >= {threshold})"


def cmd_ehrhart_simplex(args):
    w = parse_weights(args.weights)
    lam = lambda_w(w)
    return lam.format(), {**lam.to_json(), "weights": list(w.weights)}


def _load_polytope(path):
    data = _load_json(path)
    try:
        return HPolytope.from_json(data)
    except (KeyError, TypeError) as exc:
        raise UsageError(f"polytope JSON needs 'A' and 'b': {exc}") from None


def cmd_ehrhart_polytope(args):
    P = _load_polytope(args.file)
    rep = polytope_report(P, cap=args.cap)
    L = rep["ehrhart"]
    lines = [
        f"L(P, t) = {L.format()}",
        f"vertices: {fmt_points(rep['vertices'])}",
        f"D(P) = {rep['denominator']}",
        f"volume = {format_rational(rep['volume'])}",
    ]
    if not rep["full_dimensional"]:
        lines.append("note: polytope is not full-dimensional")
    data = {
        "ehrhart": L.to_json(),
        "vertices": [[format_rational(c) for c in v] for v in rep["vertices"]],
        "denominator": rep["denominator"],
        "volume": format_rational(rep["volume"]),
        "full_dimensional": rep["full_dimensional"],
    }
    return "\n".join(lines), data


def cmd_dimset(args):
    w = parse_weights(args.weights)
    A = parse_points(args.points or "", w.m)
    res = dimension_quasipoly(A, w)
    text = "\n".join([valid_line(res.chi, res.threshold), f"antichain: {fmt_points(res.antichain.points)}"])
    data = {"chi": res.chi.to_json(), "threshold": res.threshold, "antichain": res.antichain.to_json()}
    return text, data


def load_system(data):
    """Parse system JSON; returns (weights, n, polynomials or None, leader sets)."""
    if not isinstance(data, dict) or "weights" not in data:
        raise UsageError("system JSON needs a 'weights' list")
    w = WeightVector(tuple(data["weights"]))
    m = int(data.get("m", w.m))
    if m != w.m:
        raise UsageError(f"m = {m} but {w.m} weights given")
    if "leaders" in data:
        E = tuple(PointSet(m, tuple(tuple(p) for p in Ej)) for Ej in data["leaders"])
        n = int(data.get("n", len(E)))
        if n != len(E):
            raise UsageError(f"n = {n} but {len(E)} leader sets given")
        return w, n, None, E
    if "polynomials" not in data:
        raise UsageError("system JSON needs 'polynomials' or 'leaders'")
    n = int(data.get("n", 1))
    polys = [LinearSigmaPolynomial.from_json(p) for p in data["polynomials"]]
    rk = Ranking(w.weights, n)
    cs = characteristic_set(polys, rk)
    return w, n, cs, cs.leader_sets


def cmd_system(args):
    try:
        w, n, cs, E = load_system(_load_json(args.file))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, UsageError):
            raise
        raise UsageError(f"invalid system: {exc}") from None
    phi = dimension_quasipoly_system(E, w)
    r0 = system_threshold(E, w)
    a = sigma_trdeg(phi, w)
    lines = []
    if cs is not None:
        lines.append("characteristic set:")
        lines.extend(f"  {f.format(cs.ranking)}" for f in cs.elements)
    lines.extend(f"E_{j}: {fmt_points(Ej.points)}" for j, Ej in enumerate(E))
    lines.append(f"Phi: {valid_line(phi, r0)}")
    lines.append(f"degree: {phi.degree}")
    lines.append(f"leading coefficient: {phi.leading_coefficient().format('t')}")
    lines.append(f"sigma-trdeg: {a}")
    data = {
        "leaders": [Ej.to_json() for Ej in E],
        "phi": phi.to_json(),
        "threshold": r0,
        "degree": phi.degree,
        "leading_coefficient": phi.leading_coefficient().to_json(),
        "sigma_trdeg": a,
    }
    if cs is not None:
        data["characteristic_set"] = [f.to_json() for f in cs.elements]
    return "\n".join(lines), data


def cmd_count(args):
    if args.what == "simplex":
        w = parse_weights(args.weights)
        value = count_simplex(w, args.r, cap=args.cap)
    elif args.what == "polytope":
        if not args.file:
            raise UsageError("count polytope needs --file")
        value = count_polytope(_load_polytope(args.file), args.r, cap=args.cap)
    else:
        w = parse_weights(args.weights)
        A = parse_points(args.points or "", w.m)
        if args.method == "enumerate":
            value = count_VA(A, w, args.r, cap=args.cap)
        elif args.method == "recursive":
            value = count_VA_recursive(A, w, args.r)
        else:
            value = exact_count_eval(dimension_quasipoly(A, w), w, args.r)
    return str(value), {"count": value}


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration point cap")

    p = _Parser(prog="quasidim", description="Weighted Ehrhart and dimension quasi-polynomials.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("ehrhart-simplex", parents=[common], help="quasi-polynomial of {x >= 0, w.x <= t}")
    s.add_argument("--weights", required=True)
    s.set_defaults(func=cmd_ehrhart_simplex)

    s = sub.add_parser("ehrhart-polytope", parents=[common], help="Ehrhart quasi-polynomial of A x <= b")
    s.add_argument("--file", required=True)
    s.set_defaults(func=cmd_ehrhart_polytope)

    s = sub.add_parser("dimset", parents=[common], help="dimension quasi-polynomial of a subset of N^m")
    s.add_argument("--weights", required=True)
    s.add_argument("--points", default="")
    s.set_defaults(func=cmd_dimset)

    s = sub.add_parser("system", parents=[common], help="difference dimension quasi-polynomial of a linear system")
    s.add_argument("--file", required=True)
    s.set_defaults(func=cmd_system)

    s = sub.add_parser("count", parents=[common], help="brute-force counting oracles")
    s.add_argument("what", choices=["simplex", "polytope", "va"])
    s.add_argument("--weights")
    s.add_argument("--points", default="")
    s.add_argument("--file")
    s.add_argument("--r", type=int, required=True, help="dilation / order bound")
    s.add_argument("--method", choices=["enumerate", "recursive", "formula"], default="enumerate")
    s.set_defaults(func=cmd_count)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cap < 1:
        parser.error("--cap must be at least 1")
    if args.command == "count" and args.what != "polytope" and not args.weights:
        parser.error("count simplex/va needs --weights")
    try:
        text, data = args.func(args)
    except (EnumerationCapExceeded, SubsetExplosionError) as exc:
        print(f"quasidim: guard rail: {exc}", file=sys.stderr)
        return 2
    except (UsageError, ValueError) as exc:
        print(f"quasidim: error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps({**data, "pretty": text}, indent=2))
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())

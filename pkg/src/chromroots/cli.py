"""Command-line entry point.

Exit codes: 0 success, 1 falsified certification (or no witness found),
2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import __version__

EXIT_OK, EXIT_FALSIFIED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _positive_fraction(text: str) -> Fraction:
    f = _fraction(text)
    if f <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return f


def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text!r}")
    return v


def _read_graph(path: str):
    from .graph import Graph, GraphError

    try:
        return Graph.read(path)
    except FileNotFoundError:
        raise UsageError(f"graph file not found: {path}") from None
    except GraphError as exc:
        raise UsageError(f"cannot parse {path}: {exc}") from None


def _header(args) -> dict:
    return {"command": args.command, "seed": args.seed, "version": __version__}


# -- subcommands --------------------------------------------------------------

def cmd_poly(args) -> tuple[int, object]:
    from .chromatic import chromatic_polynomial, default_cache, factored_over_blocks

    g = _read_graph(args.graphfile)
    p = chromatic_polynomial(g)
    if args.format == "text":
        return EXIT_OK, f"P(G,t) = {p}\n       = {factored_over_blocks(g)}\n"
    return EXIT_OK, {
        **_header(args), "n": g.n, "m": g.m, "coefficients": p.to_json_list(),
        "expanded": str(p), "factored": factored_over_blocks(g), "cache": default_cache().stats(),
    }


def cmd_family(args) -> tuple[int, object]:
    from .families import make_F, make_G, make_generalized_triangle, make_H

    meta: dict = {"family": args.kind}
    if args.kind == "H":
        g = make_H(args.params[0])
    elif args.kind == "F":
        b = make_F(args.params[0])
        g = b.graph
        meta.update(attach_x=b.attach_x, attach_y=b.attach_y)
    elif args.kind == "G":
        g = make_G(*args.params)
        meta.update(attach_x=0, attach_y=1)
    else:
        g = make_generalized_triangle(args.seed, args.steps)
        meta.update(steps=args.steps)
    if args.format == "json":
        return EXIT_OK, {**_header(args), **meta, "graph": g.to_json_dict()}
    label = " ".join(str(x) for x in args.params) if args.kind != "gt" else f"steps={args.steps} seed={args.seed}"
    return EXIT_OK, f"# {args.kind} {label}\n" + g.to_edge_list()


def _family_params(parser, args) -> None:
    expected = {"H": 1, "F": 1, "G": 3, "gt": 0}[args.kind]
    if len(args.params) != expected:
        parser.error(f"family {args.kind} takes {expected} integer argument(s), got {len(args.params)}")
    if args.kind == "gt" and args.steps is None:
        parser.error("family gt requires --steps")


def cmd_closedform(args) -> tuple[int, object]:
    import mpmath

    from . import closedform as cf
    from .chromatic import chromatic_polynomial
    from .families import make_G, make_H
    from .poly import eval_rational

    t = args.t
    try:
        params = cf.closed_form_params(t)
    except cf.DomainError as exc:
        raise UsageError(str(exc)) from None
    out = {**_header(args), "t": str(t), "params": params.to_dict(),
           "residuals": {k: mpmath.nstr(v, 5) for k, v in params.residuals().items()}}
    left, right = cf.check_gamma_inequality(t)
    out["gamma_inequality"] = {"gamma_beta_lt_minus_A": left, "minus_A_le_gamma_alpha": right}
    if args.k is not None:
        closed = cf.eval_H_closed(args.k, t, params)
        exact = eval_rational(chromatic_polynomial(make_H(args.k)), t)
        out["H"] = {"k": args.k, "closed": mpmath.nstr(closed, 20), "exact": str(exact),
                    "delta": mpmath.nstr(closed - cf.to_mpf(exact), 5)}
    if args.ijk is not None:
        i, j, k = args.ijk
        res = cf.resolve_h_offset()
        rec = cf.eval_G_recurrence((i, j, k), t, params)
        cd = cf.g_closed_form(i, k, t, params)
        exact_poly = cf.exact_G_polynomial((i, j, k))
        exact = eval_rational(exact_poly, t)
        entry = {"ijk": [i, j, k], "recurrence": mpmath.nstr(rec, 20), "C": mpmath.nstr(cd.C, 20),
                 "D": mpmath.nstr(cd.D, 20), "C_alpha_j_plus_D_beta_j": mpmath.nstr(cd(j), 20),
                 "exact": str(exact), "delta": mpmath.nstr(rec - cf.to_mpf(exact), 5),
                 "offset": res.offset, "textbook_offset": res.textbook_offset}
        if (i + j + k) * 2 + 5 <= 41:
            entry["engine_agrees"] = exact_poly == chromatic_polynomial(make_G(i, j, k))
        if j == 1:
            entry["j1_textbook_indices"] = mpmath.nstr(cf.eval_G_j1(i, k, t, params, literal=True), 20)
        out["G"] = entry
    return EXIT_OK, out


def cmd_check_delta(args) -> tuple[int, object]:
    from .structure import has_property_delta

    g = _read_graph(args.graphfile)
    return EXIT_OK, {**_header(args), "n": g.n, "m": g.m, **has_property_delta(g).to_dict()}


def cmd_spanning_tree(args) -> tuple[int, object]:
    from .graph import DisconnectedError
    from .structure import find_spanning_tree_max_leaves

    g = _read_graph(args.graphfile)
    try:
        res = find_spanning_tree_max_leaves(g, args.max_leaves)
    except DisconnectedError as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK, {**_header(args), "max_leaves": args.max_leaves, "found": res is not None,
                     "tree": res.to_dict() if res else None}


def cmd_constants(args) -> tuple[int, object]:
    from .certify import T0_POLY, T1_POLY, compute_constants

    c = compute_constants(args.precision)
    out = {**_header(args), "precision": str(args.precision), **c.to_dict()}
    out["t0"]["defining_polynomial"] = str(T0_POLY)
    out["t1"]["defining_polynomial"] = str(T1_POLY)
    out["t0"]["residual_at_midpoint"] = float(T0_POLY(c.t0.midpoint))
    out["t1"]["residual_at_midpoint"] = float(T1_POLY(c.t1.midpoint))
    return EXIT_OK, out


def cmd_verify(args) -> tuple[int, object]:
    from .certify import certify_h_zero_free, certify_zero_free
    from .closedform import resolve_h_offset

    if args.family == "H":
        report = certify_h_zero_free(args.max)
    else:
        report = certify_zero_free(args.max, threads=args.threads)
    out = {**_header(args), **report.to_dict()}
    if args.family == "G":
        out["offset_resolution"] = {k: v for k, v in resolve_h_offset().to_dict().items() if k != "checks"}
    return (EXIT_OK if report.ok else EXIT_FALSIFIED), out


def cmd_scan(args) -> tuple[int, object]:
    from .certify import RootNotFound, find_root_above_t1, q_curve
    from .closedform import exact_G_polynomial

    try:
        hit = find_root_above_t1(args.eps, args.bound, args.j_bound, below_t0=args.below_t0)
    except RootNotFound as exc:
        return EXIT_FALSIFIED, {**_header(args), "found": False, "message": str(exc), "last": exc.details}
    out = {**_header(args), "found": True, **hit.to_dict()}
    if args.csv:
        p = exact_G_polynomial(hit.index)
        q = -p if hit.index.n_vertices % 2 else p
        with open(args.csv, "w", newline="") as fh:
            _write_curve(fh, q_curve(q))
        out["csv"] = args.csv
    return EXIT_OK, out


def cmd_sign_profile(args) -> tuple[int, object]:
    from .certify import q_curve, sign_profile
    from .chromatic import q_polynomial

    g = _read_graph(args.graphfile)
    if args.format == "csv":
        buf = io.StringIO()
        _write_curve(buf, q_curve(q_polynomial(g), args.samples))
        return EXIT_OK, buf.getvalue()
    points = args.points or [Fraction(5, 4)]
    try:
        signs = sign_profile(g, points)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK, {**_header(args), "points": [str(p) for p in points], "signs": signs}


def _write_curve(fh, curve) -> None:
    w = csv.writer(fh)
    w.writerow(["t", "Q"])
    for t, q in curve:
        w.writerow([repr(float(t)), repr(float(q))])


# -- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write output to this path instead of stdout")
    common.add_argument("--format", choices=("json", "csv", "text"), default=None)
    common.add_argument("--seed", type=int, default=0, help="seed for randomised commands (default 0)")
    common.add_argument("--threads", type=int, default=1)

    p = argparse.ArgumentParser(prog="chromroots", description="Exact chromatic polynomial workbench.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("poly", parents=[common], help="chromatic polynomial of an edge-list graph")
    s.add_argument("graphfile")
    s.set_defaults(func=cmd_poly, default_format="json")

    s = sub.add_parser("family", parents=[common], help="emit H_k, F_k, G_ijk or a generalized triangle")
    s.add_argument("kind", choices=("H", "F", "G", "gt"))
    s.add_argument("params", nargs="*", type=_nonneg_int)
    s.add_argument("--steps", type=_nonneg_int)
    s.set_defaults(func=cmd_family, default_format="text")

    s = sub.add_parser("closedform", parents=[common], help="closed-form parameters and cross-checks at t")
    s.add_argument("--t", type=_fraction, required=True)
    s.add_argument("--k", type=_nonneg_int)
    s.add_argument("--ijk", type=_nonneg_int, nargs=3)
    s.set_defaults(func=cmd_closedform, default_format="json")

    s = sub.add_parser("check-delta", parents=[common], help="test property Delta")
    s.add_argument("graphfile")
    s.set_defaults(func=cmd_check_delta, default_format="json")

    s = sub.add_parser("spanning-tree", parents=[common], help="spanning tree with few leaves")
    s.add_argument("graphfile")
    s.add_argument("--max-leaves", type=int, required=True)
    s.set_defaults(func=cmd_spanning_tree, default_format="json")

    s = sub.add_parser("constants", parents=[common], help="isolating intervals for t0 and t1")
    s.add_argument("--precision", type=_positive_fraction, default=Fraction(1, 10**12))
    s.set_defaults(func=cmd_constants, default_format="json")

    s = sub.add_parser("verify", parents=[common], help="Sturm certification of zero-free intervals")
    s.add_argument("what", choices=("zero-free",))
    s.add_argument("--max", type=_nonneg_int, default=4)
    s.add_argument("--family", choices=("G", "H"), default="G")
    s.set_defaults(func=cmd_verify, default_format="json")

    s = sub.add_parser("scan-convergence", parents=[common], help="find a chromatic root just above t1")
    s.add_argument("--eps", type=_positive_fraction, required=True)
    s.add_argument("--bound", type=_nonneg_int, default=40, help="largest k (default 40)")
    s.add_argument("--j-bound", type=_nonneg_int, default=200)
    s.add_argument("--below-t0", action="store_true", help="also require the root to lie below t0")
    s.add_argument("--csv", help="write the (t, Q(t)) curve of the witness here")
    s.set_defaults(func=cmd_scan, default_format="json")

    s = sub.add_parser("sign-profile", parents=[common], help="signs of Q(G,t) at rational points")
    s.add_argument("graphfile")
    s.add_argument("--points", type=_fraction, nargs="+")
    s.add_argument("--samples", type=int, default=200)
    s.set_defaults(func=cmd_sign_profile, default_format="json")
    return p


def _validate(parser, args) -> None:
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    if args.command == "family":
        _family_params(parser, args)
    if args.command == "spanning-tree" and args.max_leaves < 2:
        parser.error("--max-leaves must be at least 2")
    if args.format is None:
        args.format = args.default_format


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        _validate(parser, args)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        code, payload = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())

"""Command-line front end.

Subcommands: ``verify`` (run sampled verification suites), ``resolve``
(resolve the crossings of two curves from a curve file), ``bound``
(component counts and crossing lower bounds, from class vectors or an
abstract arc-graph JSON), and ``sample`` (export model points with
membership residuals for external plotting).

Machine-readable JSON goes to stdout or --out; human-oriented progress
lines go to stderr.  Exit codes: 0 success, 1 verification failure,
2 usage or malformed input, 3 geometric rejection.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import verify as verify_mod
from .bounds import (
    ClassRep,
    arc_graph,
    component_gap_bound,
    min_components,
    resolved_components,
    weighted_crossing_bound,
)
from .config import RunConfig
from .curvefile import dumps_report, load_curvefile, resolution_to_dict
from .family import sample_zero_set
from .gluemap import to_model_filled
from .localmodel import cpair, filled_model_homeo, model_map, model_param, rpair
from .oracle import sphere4_points, unit_sample
from .svg import render_resolution_svg
from .torus import GeometryError, NonTransversalError, resolve_crossings

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_GEOMETRY = 3


def _fail_usage(message):
    print("error: %s" % message, file=sys.stderr)
    return EXIT_USAGE


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _build_config(args):
    cfg = RunConfig()
    path = getattr(args, "config", None)
    if path:
        with open(path) as fh:
            data = json.load(fh)
        if not isinstance(data, dict):
            raise ValueError("config file must hold a JSON object")
        known = set(RunConfig.__dataclass_fields__)
        unknown = set(data) - known
        if unknown:
            raise ValueError("unknown config keys: %s" % sorted(unknown))
        if "ramp_eps" in data:
            data["ramp_eps"] = tuple(data["ramp_eps"])
        cfg = cfg.with_overrides(**data)
    return cfg.with_overrides(
        seed=getattr(args, "seed", None),
        tol_residual=getattr(args, "tol", None),
        chamfer=getattr(args, "chamfer", None))


# ----------------------------------------------------------------------------
# verify
# ----------------------------------------------------------------------------

def cmd_verify(args):
    try:
        config = _build_config(args)
    except (ValueError, OSError) as exc:
        return _fail_usage(str(exc))
    if args.suite == "all":
        results = verify_mod.run_all(config)
    else:
        results = {args.suite: verify_mod.SUITES[args.suite](config)}
    ok = verify_mod.all_pass(results)
    report = {
        "schema": 1,
        "command": "verify",
        "suite": args.suite,
        "seed": config.seed,
        "pass": ok,
        "suites": {name: [r.as_dict() for r in reports]
                   for name, reports in results.items()},
    }
    for name, reports in results.items():
        for r in reports:
            print("%-14s %-22s %s" % (name, r.name,
                                      "pass" if r.passed else "FAIL"),
                  file=sys.stderr)
    _emit(dumps_report(report), args.out)
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


# ----------------------------------------------------------------------------
# resolve
# ----------------------------------------------------------------------------

def cmd_resolve(args):
    try:
        config = _build_config(args)
    except (ValueError, OSError) as exc:
        return _fail_usage(str(exc))
    try:
        curves = load_curvefile(args.input)
    except (OSError, json.JSONDecodeError) as exc:
        return _fail_usage("cannot read curve file: %s" % exc)
    except GeometryError as exc:
        return _fail_usage(str(exc))
    if len(curves) != 2:
        return _fail_usage("resolve needs exactly two curves, file has %d"
                           % len(curves))
    try:
        resolution = resolve_crossings(curves[0], curves[1],
                                       chamfer=config.chamfer,
                                       angle_min=config.angle_min)
    except NonTransversalError as exc:
        print("geometric rejection: %s" % exc, file=sys.stderr)
        return EXIT_GEOMETRY
    except GeometryError as exc:
        print("geometric rejection: %s" % exc, file=sys.stderr)
        return EXIT_GEOMETRY

    data = resolution_to_dict(resolution)
    with open(args.out, "w") as fh:
        fh.write(dumps_report(data))
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(render_resolution_svg(resolution))

    for c in curves:
        print("input %s class (%d,%d)" % ((c.ident,) + c.homology_class()))
    total = np.add(curves[0].homology_class(), curves[1].homology_class())
    print("sum (%d,%d)" % tuple(total))
    print("crossings %d" % len(resolution.crossings))
    print("components %d" % len(resolution.curves))
    for c in resolution.curves:
        print("output %s class (%d,%d)" % ((c.ident,) + c.homology_class()))
    return EXIT_OK


# ----------------------------------------------------------------------------
# bound
# ----------------------------------------------------------------------------

def _parse_int_pair(text, what):
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError("%s must be two integers 'a,b'" % what)
    return int(parts[0]), int(parts[1])


def _parse_classes(text):
    chunks = text.split(";")
    if len(chunks) != 2:
        raise ValueError("expected two classes 'p,q;p,q'")
    return [tuple(int(v) for v in chunk.split(",")) for chunk in chunks]


def cmd_bound(args):
    if args.config:
        try:
            with open(args.config) as fh:
                data = json.load(fh)
            instance = data.get("graph", data)
            graph = arc_graph(instance)
            choices = data.get("choices", instance.get("choices"))
            if choices is None:
                choices = {c["id"]: 1 for c in graph.crossings
                           if not c["side1"]["special"]
                           and not c["side2"]["special"]}
            components = resolved_components(
                graph, {k: int(v) for k, v in choices.items()})
        except (OSError, json.JSONDecodeError, ValueError) as exc:
            return _fail_usage(str(exc))
        report = {"schema": 1, "command": "bound", "mode": "graph",
                  "components": components}
        print("components %d" % components, file=sys.stderr)
        _emit(dumps_report(report), args.out)
        return EXIT_OK

    if not args.classes:
        return _fail_usage("bound needs --classes or --config")
    try:
        vecs = _parse_classes(args.classes)
        a, b = _parse_int_pair(args.weights, "--weights")
        ori = _parse_int_pair(args.orientable, "--orientable")
        twi = _parse_int_pair(args.twisted, "--twisted")
        reps = [ClassRep(free=v, sigma=bool(t), ambient_orientable=bool(o))
                for v, o, t in zip(vecs, ori, twi)]
        total = reps[0].scale(a) + reps[1].scale(b)
        lb1 = component_gap_bound(reps[0], reps[1]) if (a, b) == (1, 1) else None
        lb2 = weighted_crossing_bound(a, b, reps[0], reps[1])
    except ValueError as exc:
        return _fail_usage(str(exc))

    c_total = min_components(total)
    report = {
        "schema": 1,
        "command": "bound",
        "mode": "classes",
        "classes": [list(v) for v in vecs],
        "weights": [a, b],
        "div": [reps[0].div, reps[1].div],
        "sum_class": list(total.free),
        "sum_div": total.div,
        "min_components": c_total,
        "component_gap_bound": {
            "applicable": lb1 is not None,
            "value": lb1,
        },
        "weighted_crossing_bound": {
            "applicable": lb2 is not None,
            "fraction": None if lb2 is None else str(lb2[0]),
            "ceiling": None if lb2 is None else lb2[1],
        },
    }
    print("div %s" % report["div"], file=sys.stderr)
    print("sum class %s div %d" % (report["sum_class"], total.div),
          file=sys.stderr)
    print("min components %d" % c_total, file=sys.stderr)
    if lb1 is not None:
        print("crossing bound (component gap) %d" % lb1, file=sys.stderr)
    elif (a, b) == (1, 1):
        print("crossing bound (component gap) not applicable: "
              "min components %d < 3" % c_total, file=sys.stderr)
    if lb2 is not None:
        print("crossing bound (weighted) %s, ceiling %d"
              % (str(lb2[0]), lb2[1]), file=sys.stderr)
    else:
        print("crossing bound (weighted) not applicable: "
              "min components %d <= |a|+|b| = %d" % (c_total, abs(a) + abs(b)),
              file=sys.stderr)
    _emit(dumps_report(report), args.out)
    return EXIT_OK


# ----------------------------------------------------------------------------
# sample
# ----------------------------------------------------------------------------

def _sample_rows(what, n, seed, g):
    if what == "model":
        u = unit_sample(n, 2, seed=seed)
        pts = model_param(0.01 + 0.98 * u[:, 0], 2.0 * np.pi * u[:, 1])
        res = np.linalg.norm(model_map(pts), axis=-1)
        cols = ["x1", "x2", "y1", "y2", "residual"]
        rows = np.column_stack([pts, res])
    elif what == "filled":
        t = unit_sample(n, 1, seed=seed)[:, 0]
        q = sphere4_points(n, seed=seed + 1)
        pts = filled_model_homeo(q, t)
        x, y = cpair(pts)
        res = np.maximum(np.abs(x) + np.abs(y) - 1.0, 0.0)
        cols = ["x1", "x2", "y1", "y2", "residual"]
        rows = np.column_stack([pts, res])
    elif what == "family":
        gc = complex(g)
        t = abs(gc)
        if t > 1.0:
            raise ValueError("g must lie in the closed unit disk")
        u = unit_sample(n, 2, seed=seed)
        if t == 0.0:
            half = n // 2
            disk = np.sqrt(u[:, 0]) * np.exp(2j * np.pi * u[:, 1])
            zeros = np.zeros(n, dtype=complex)
            first = np.arange(n) < half
            pts = rpair(np.where(first, disk, zeros),
                        np.where(first, zeros, disk))
            x, y = cpair(pts)
            res = np.abs(2.0 * x * y)
        else:
            psi = np.full(n, np.angle(gc))
            params = np.column_stack([
                np.full(n, t), psi,
                0.01 + 0.98 * u[:, 0], 2.0 * np.pi * u[:, 1]])
            _, pts = sample_zero_set(params)
            x, y = cpair(pts)
            rem = 1.0 - np.sum(pts * pts, axis=-1)
            res = np.abs(2.0 * x * y - np.conjugate(gc) * rem)
        cols = ["g1", "g2", "x1", "x2", "y1", "y2", "residual"]
        rows = np.column_stack([np.full(n, gc.real), np.full(n, gc.imag),
                                pts, res])
    elif what == "interpolation":
        pf = _filled_for_sample(n, seed)
        z, pts = to_model_filled(pf)
        x, y = cpair(pts)
        rem = 1.0 - np.sum(pts * pts, axis=-1)
        res = np.abs(2.0 * x * y - np.conjugate(z) * rem)
        cols = ["z1", "z2", "x1", "x2", "y1", "y2", "residual"]
        rows = np.column_stack([z.real, z.imag, pts, res])
    else:
        raise ValueError("unknown sample target %r" % what)
    return cols, rows


def _filled_for_sample(n, seed):
    t = 0.01 + 0.98 * unit_sample(n, 1, seed=seed)[:, 0]
    q = sphere4_points(n, seed=seed + 1)
    return filled_model_homeo(q, t)


def cmd_sample(args):
    if args.n < 1:
        return _fail_usage("--n must be at least 1")
    try:
        g = _parse_complex(args.g)
        cols, rows = _sample_rows(args.what, args.n, args.seed or 0, g)
    except ValueError as exc:
        return _fail_usage(str(exc))
    if args.out and args.out.endswith(".json"):
        payload = {"schema": 1, "command": "sample", "what": args.what,
                   "columns": cols,
                   "rows": [[float(v) for v in row] for row in rows]}
        _emit(dumps_report(payload), args.out)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(cols)
        for row in rows:
            writer.writerow(["%.17g" % v for v in row])
        _emit(buf.getvalue(), args.out)
    return EXIT_OK


def _parse_complex(text):
    parts = str(text).split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise ValueError("complex values are 're' or 're,im'")


# ----------------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="embsum",
        description="Library front end: verification suites, torus curve "
                    "resolution, crossing bounds, and model sampling.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("suite", nargs="?", default="all",
                          choices=sorted(verify_mod.SUITES) + ["all"])
    p_verify.add_argument("--config", help="JSON file with RunConfig fields")
    p_verify.add_argument("--seed", type=int)
    p_verify.add_argument("--tol", type=float,
                          help="override the residual tolerance")
    p_verify.add_argument("--out", help="write the JSON report here")
    p_verify.set_defaults(func=cmd_verify)

    p_resolve = sub.add_parser("resolve", help="resolve two curves' crossings")
    p_resolve.add_argument("input", help="curve file (JSON) with two curves")
    p_resolve.add_argument("--out", required=True,
                           help="write the resolved diagram JSON here")
    p_resolve.add_argument("--svg", help="also render an SVG here")
    p_resolve.add_argument("--chamfer", type=float)
    p_resolve.add_argument("--config", help="JSON file with RunConfig fields")
    p_resolve.add_argument("--seed", type=int)
    p_resolve.set_defaults(func=cmd_resolve)

    p_bound = sub.add_parser("bound", help="component counts and bounds")
    p_bound.add_argument("--classes", help="two classes 'p,q;p,q'")
    p_bound.add_argument("--weights", default="1,1", help="weights 'a,b'")
    p_bound.add_argument("--orientable", default="1,1",
                         help="per-class orientable flags '1,1'")
    p_bound.add_argument("--twisted", default="0,0",
                         help="per-class torsion flags '0,0'")
    p_bound.add_argument("--config",
                         help="abstract arc-graph JSON (with choices)")
    p_bound.add_argument("--out", help="write the JSON report here")
    p_bound.set_defaults(func=cmd_bound)

    p_sample = sub.add_parser("sample", help="export model point samples")
    p_sample.add_argument("--what", required=True,
                          choices=["model", "filled", "family",
                                   "interpolation"])
    p_sample.add_argument("--n", type=int, default=1000)
    p_sample.add_argument("--seed", type=int, default=0)
    p_sample.add_argument("--g", default="0.5",
                          help="gluing parameter for --what family")
    p_sample.add_argument("--out", help="output path (.csv or .json)")
    p_sample.set_defaults(func=cmd_sample)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: JSON in, JSON out.

All index-valued inputs and outputs use the order of the normals in the
input file; internally everything is re-sorted counterclockwise and mapped
back on the way out.  Exit codes: 0 success, 1 invalid input, 2 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

import numpy as np

from .classify import classify
from .errors import InputError, InternalInvariantViolation
from .geometry import NormalSet, cone_volume_vector, intersect_halfplanes, validate_normals
from .polytopes import (
    PolytopeRep,
    hull_halfspaces,
    irredundant_facets,
    pscc_halfspaces,
    structure_predicates,
)
from .sampling import DISTRIBUTIONS, sample_cone_volumes
from .solve import SolveOptions, decide_membership, solve
from .verify import verify_suite


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _load_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _load_normals(path: str) -> NormalSet:
    data = _load_json(path)
    if "normals" in data:
        return validate_normals(data["normals"])
    if "angles_deg" in data:
        return validate_normals(data["angles_deg"])
    raise InputError(f"{path} needs a 'normals' or 'angles_deg' field")


def _load_vector(path: str, key: str, m: int) -> np.ndarray:
    data = _load_json(path)
    if key not in data:
        raise InputError(f"{path} needs a {key!r} field")
    vec = np.asarray(data[key], dtype=float)
    if vec.shape != (m,):
        raise InputError(f"{key} in {path} has shape {vec.shape}, expected ({m},)")
    return vec


def _emit(payload: dict) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _rep_in_input_order(rep: PolytopeRep, normals: NormalSet) -> dict:
    out = rep.to_json()
    out["halfspaces"] = [{"a": [float(x) for x in normals.to_input(h["a"])],
                          "rhs": h["rhs"]} for h in out["halfspaces"]]
    out["vertices"] = [[float(x) for x in normals.to_input(v)] for v in out["vertices"]]
    return out


def _cmd_classify(args) -> int:
    normals = _load_normals(args.input)
    cls = classify(normals)
    to_in = [int(normals.input_order[k]) for k in range(normals.m)]
    _emit({
        "delta": sorted(to_in[k] for k in cls.delta_indices),
        "square": sorted(to_in[k] for k in cls.square_indices),
        "adjacency": {str(to_in[i]): sorted(to_in[k] for k in adj)
                      for i, adj in cls.adjacency.items()},
        "antipode": {str(to_in[i]): to_in[j] for i, j in sorted(cls.antipode.items())},
        "reducible": cls.reducible,
        "witness": {str(to_in[i]): [float(x) for x in d]
                    for i, d in sorted(cls.hemisphere_witness.items())},
    })
    return 0


def _cmd_pscc(args) -> int:
    normals = _load_normals(args.input)
    _emit(_rep_in_input_order(pscc_halfspaces(normals), normals))
    return 0


def _cmd_hull(args) -> int:
    normals = _load_normals(args.input)
    cls = classify(normals)
    rep = hull_halfspaces(normals, cls)
    if args.irredundant:
        rep = irredundant_facets(rep)
    out = _rep_in_input_order(rep, normals)
    out.update(structure_predicates(normals, cls))
    _emit(out)
    return 0


def _cmd_cone_volume(args) -> int:
    normals = _load_normals(args.input)
    b_in = _load_vector(args.b, "b", normals.m)
    b = normals.to_canonical(b_in)
    poly = intersect_halfplanes(normals, b)
    gamma = cone_volume_vector(normals, b, poly)
    _emit({
        "gamma": [float(x) for x in normals.to_input(gamma)],
        "area": float(poly.area),
        "degenerate": bool(poly.degenerate),
    })
    return 0


def _cmd_check(args) -> int:
    normals = _load_normals(args.input)
    gamma = normals.to_canonical(_load_vector(args.gamma, "gamma", normals.m))
    opts = SolveOptions(tol=args.tol, seed=args.seed)
    verdict = decide_membership(normals, gamma, opts, closure=args.closure)
    out = verdict.to_json()
    if "witness" in out:
        out["witness"] = [float(x) for x in normals.to_input(out["witness"])]
    _emit(out)
    return 0


def _cmd_solve(args) -> int:
    normals = _load_normals(args.input)
    gamma = normals.to_canonical(_load_vector(args.gamma, "gamma", normals.m))
    opts = SolveOptions(tol=args.tol, max_iters=args.max_iters,
                        restarts=args.restarts, seed=args.seed)
    result = solve(normals, gamma, opts)
    out = result.to_json()
    out["b"] = [float(x) for x in normals.to_input(out["b"])]
    _emit(out)
    return 0


def _parse_projection(text: str, m: int) -> list[int]:
    try:
        cols = [int(t) for t in text.split(",")]
    except ValueError as exc:
        raise InputError(f"bad --project value {text!r}") from exc
    if any(c < 1 or c > m for c in cols) or not cols:
        raise InputError(f"--project indices must be between 1 and {m}")
    return [c - 1 for c in cols]


def _cmd_sample(args) -> int:
    normals = _load_normals(args.input)
    batch = sample_cone_volumes(normals, args.count, args.seed, args.dist)
    gammas = np.array([normals.to_input(g) for g in batch.gammas])
    if args.csv:
        cols = (_parse_projection(args.project, normals.m)
                if args.project else list(range(normals.m)))
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow([f"gamma{c + 1}" for c in cols])
            writer.writerows(gammas[:, cols].tolist())
        _emit({"seed": args.seed, "dist": args.dist, "count": batch.count,
               "csv": args.csv})
    else:
        _emit({"seed": args.seed, "dist": args.dist, "count": batch.count,
               "gammas": [[float(x) for x in g] for g in gammas]})
    return 0


def _cmd_verify(args) -> int:
    normals = _load_normals(args.input)
    report = verify_suite(normals, args.count, args.seed)
    _emit(report.to_json())
    return 0 if report.ok else 2


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="conevol",
                     description="Planar cone-volume sets: polygons, hulls, oracles, solver.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--input", required=True, help="normals JSON file")
        p.set_defaults(fn=fn)
        return p

    add("classify", _cmd_classify, help="structural sets of the normals")
    add("pscc", _cmd_pscc, help="concentration polytope, both forms")
    p = add("hull", _cmd_hull, help="cone-volume hull, both forms")
    p.add_argument("--irredundant", action="store_true",
                   help="keep only facet-defining halfspaces")
    p = add("cone-volume", _cmd_cone_volume, help="cone volumes of P(U, b)")
    p.add_argument("--b", required=True, help="support vector JSON file")
    p = add("check", _cmd_check, help="membership verdict for a weight vector")
    p.add_argument("--gamma", required=True, help="target JSON file")
    p.add_argument("--closure", action="store_true",
                   help="decide membership in the closure instead")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--seed", type=int, default=0)
    p = add("solve", _cmd_solve, help="invert the cone-volume map numerically")
    p.add_argument("--gamma", required=True, help="target JSON file")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--max-iters", type=int, default=5000)
    p.add_argument("--restarts", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p = add("sample", _cmd_sample, help="sample normalized cone-volume vectors")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--dist", choices=DISTRIBUTIONS, default="uniform01")
    p.add_argument("--csv", help="write samples to this CSV file")
    p.add_argument("--project", help="1-based columns for the CSV, e.g. 1,2,3")
    p = add("verify", _cmd_verify, help="run the structural-law verification suite")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except InternalInvariantViolation as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 2
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

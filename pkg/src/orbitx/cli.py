"""Command-line front end: ``orbitx <command> --group A2 --M 4 ...``."""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import functions, grid as gridmod, splitting, transforms
from .io import (JobConfig, complex_pairs, frac_str, load_json, load_samples, parse_complex_pairs,
                 parse_vector)
from .rootdata import TorusPoint, Weight, make_root_system, reality_class
from .verify import run_checks


class CLIError(Exception):
    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


def _emit(obj, out: str | None):
    text = json.dumps(obj, indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fail(kind: str, message: str) -> int:
    sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")
    return 2


def _config(args) -> JobConfig:
    return JobConfig(group=args.group, M=args.M,
                     gamma=getattr(args, "gamma", "pcheck"),
                     flavor=getattr(args, "flavor", "C"), tol=getattr(args, "tol", None),
                     input=getattr(args, "input", None), output=getattr(args, "output", None))


def _setup(cfg: JobConfig):
    rs = make_root_system(cfg.group)
    g = gridmod.build_grid(rs, cfg.M, cfg.gamma)
    ws = gridmod.build_weight_set(rs, cfg.M, cfg.gamma, cfg.flavor)
    return rs, g, ws


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_info(args):
    rs = make_root_system(args.group)
    return {
        "group": rs.name,
        "rank": rs.rank,
        "cartan": [list(r) for r in rs.cartan],
        "marks": list(rs.marks),
        "weyl_order": rs.weyl_order,
        "center_order": rs.center_order,
        "reality": reality_class(rs),
        "opposite_is_minus_one": rs.opposite_is_minus_one,
        "opposite_parity": rs.opposite_parity,
        "region_vertices": [[frac_str(c) for c in v] for v in rs.simplex_vertices()],
    }


def cmd_grid(args):
    cfg = _config(args)
    rs = make_root_system(cfg.group)
    return gridmod.build_grid(rs, cfg.M, cfg.gamma).to_json()


def cmd_eval(args):
    cfg = _config(args)
    rs = make_root_system(cfg.group)
    lam = Weight(rs, parse_vector(args.weight))
    if args.point:
        pts = [TorusPoint(rs, parse_vector(p)) for p in args.point]
        vals = [functions.evaluate(cfg.flavor, lam, x) for x in pts]
        return {"group": rs.name, "flavor": cfg.flavor, "weight": list(lam.as_ints()),
                "points": [[frac_str(c) for c in x] for x in pts],
                "values": complex_pairs(vals)}
    g = gridmod.build_grid(rs, cfg.M, cfg.gamma)
    return {"group": rs.name, "flavor": cfg.flavor, "weight": list(lam.as_ints()),
            "M": cfg.M, "gamma": g.gamma_flavor,
            "points": [[frac_str(c) for c in x] for x in g.flavor_points(cfg.flavor)],
            "values": complex_pairs(functions.eval_on_grid(cfg.flavor, lam, g))}


def cmd_transform(args):
    cfg = _config(args)
    if not cfg.input:
        raise CLIError("usage", "transform needs --in")
    rs, g, ws = _setup(cfg)
    spectrum = transforms.forward(cfg.flavor, g, ws, load_samples(cfg.input))
    return spectrum.to_json()


def _spectrum_from_json(data):
    cfg = JobConfig(group=data["group"], M=data["M"], gamma=data.get("gamma", "pcheck"),
                    flavor=data["flavor"])
    rs = make_root_system(cfg.group)
    ws = gridmod.weight_set_from_weights(rs, cfg.M, cfg.gamma, cfg.flavor, data["weights"])
    spectrum = transforms.SpectralVector(cfg.flavor, ws, parse_complex_pairs(data["coeffs"]))
    return rs, cfg, spectrum


def cmd_synthesize(args):
    if not args.input:
        raise CLIError("usage", "synthesize needs --in")
    rs, cfg, spectrum = _spectrum_from_json(load_json(args.input))
    if args.points:
        raw = load_json(args.points)
        raw = raw["points"] if isinstance(raw, dict) else raw
        pts = [TorusPoint(rs, parse_vector(p)) for p in raw]
        vals = transforms.interpolate(spectrum, pts)
    else:
        g = gridmod.build_grid(rs, cfg.M, cfg.gamma)
        pts = g.flavor_points(cfg.flavor)
        vals = transforms.inverse(spectrum, g)
    return {"group": rs.name, "flavor": cfg.flavor,
            "points": [[frac_str(c) for c in x] for x in pts], "values": complex_pairs(vals)}


def cmd_gram(args):
    cfg = _config(args)
    rs, g, ws = _setup(cfg)
    G = transforms.gram_discrete(cfg.flavor, g, ws)
    tol = (1e-9 if cfg.tol is None else cfg.tol) * g.gamma_order
    norms = np.array([float(v) for v in ws.norms])
    off = float(np.abs(G - np.diag(np.diag(G))).max()) if len(G) else 0.0
    derr = float(np.abs(np.diag(G) - norms).max()) if len(G) else 0.0
    return {"group": rs.name, "M": cfg.M, "gamma": g.gamma_flavor, "flavor": cfg.flavor,
            "gamma_order": g.gamma_order,
            "weights": [list(w.as_ints()) for w in ws.weights],
            "diag": [float(v.real) for v in np.diag(G)],
            "expected": [str(v) for v in ws.norms],
            "max_offdiag": off, "max_diag_error": derr, "tol": tol,
            "ok": off <= tol and derr <= tol}


def cmd_continuous_gram(args):
    cfg = _config(args)
    rs = make_root_system(cfg.group)
    ws = gridmod.build_weight_set(rs, cfg.M, cfg.gamma, cfg.flavor)
    mat = [[transforms.continuous_orthogonality(cfg.flavor, a, b) for b in ws.weights]
           for a in ws.weights]
    return {"group": rs.name, "flavor": cfg.flavor,
            "weights": [list(w.as_ints()) for w in ws.weights], "matrix": mat}


def cmd_split(args):
    cfg = _config(args)
    if not cfg.input:
        raise CLIError("usage", "split needs --in")
    rs = make_root_system(cfg.group)
    g = gridmod.build_grid(rs, cfg.M, cfg.gamma)
    comps = splitting.split_samples(load_samples(cfg.input), g, cfg.flavor)
    table = splitting.character_table(rs)
    return {"group": rs.name, "flavor": cfg.flavor,
            "components": [{"class": k, "class_rep": list(table.class_reps[k].as_ints()),
                            "values": complex_pairs(c)} for k, c in enumerate(comps)]}


def cmd_verify(args):
    cfg = _config(args)
    rs = make_root_system(cfg.group)
    return run_checks(rs, cfg.M, cfg.gamma, cfg.flavor, cfg.tol)


COMMANDS = {
    "info": cmd_info,
    "grid": cmd_grid,
    "eval": cmd_eval,
    "transform": cmd_transform,
    "synthesize": cmd_synthesize,
    "gram": cmd_gram,
    "continuous-gram": cmd_continuous_gram,
    "split": cmd_split,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orbitx",
                                     description="Weyl orbit functions and their discrete transforms")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--group", required=name != "synthesize", help='e.g. "A2", "C2", "A1xA1"')
        p.add_argument("--M", type=int, default=1)
        p.add_argument("--gamma", choices=("pcheck", "qcheck"), default="pcheck")
        p.add_argument("--flavor", choices=("C", "S", "E"), default="C")
        p.add_argument("--in", dest="input")
        p.add_argument("--out", dest="output")
        p.add_argument("--tol", type=float)
        if name == "eval":
            p.add_argument("--weight", required=True, help='omega-coordinates, e.g. "1,1"')
            p.add_argument("--point", action="append",
                           help='coweight coordinates, e.g. "1/3,1/3" (repeatable)')
        if name == "synthesize":
            p.add_argument("--points", help="JSON list of points; default: the grid")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = COMMANDS[args.command](args)
    except CLIError as exc:
        return _fail(exc.kind, str(exc))
    except (ValueError, KeyError, OSError, RuntimeError, TypeError) as exc:
        return _fail(type(exc).__name__, str(exc))
    _emit(result, getattr(args, "output", None))
    if args.command == "verify" and not result["ok"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

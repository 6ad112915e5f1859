"""Command-line front end: gen | build | analyze | compare | oracle | explain.

File-based composition: ``gen`` writes an instance, ``build`` turns it into
an assignment, ``analyze``/``compare``/``oracle``/``explain`` measure and
dump.  Every command is deterministic given its flags (wall time excluded);
randomness only enters through explicit --seed values.

Exit codes: 0 success, 1 I/O failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import dataclass, field

import numpy as np

from . import io
from .geometry import Instance, r_min
from .lab import (MAX_ORACLE_N, gen_clustered_plus_outlier, gen_lower_bound,
                  gen_uniform_random, oracle_max_depth, oracle_min_interference)
from .lnn import lnn
from .network import (build_network, interference_at, is_valid,
                      network_interference, uniform_assignment)
from .transform import decompose, decomposition_summary, transform

COMPARE_COLUMNS = ["method", "max_radius", "interference", "valid", "runtime_ms"]


@dataclass
class ExperimentRecord:
    """One measured method on one instance; every metric is recomputable
    from the instance and assignment files."""

    instance_path: str
    method: str
    params: dict = field(default_factory=dict)
    metrics: dict = field(default_factory=dict)
    runtime_ms: float = 0.0

    def csv_row(self) -> list:
        return [self.method, self.metrics["max_radius"], self.metrics["interference"],
                self.metrics["valid"], f"{self.runtime_ms:.3f}"]


def _default_mode(dim: int) -> str:
    if dim == 1:
        return "exact1d"
    if dim == 2:
        return "exact2d"
    return "at_sensors"


def _print(msg: str) -> None:
    sys.stdout.write(msg + "\n")


def cmd_gen(args) -> int:
    if args.kind == "lower-bound":
        inst = gen_lower_bound(args.k)
    elif args.kind == "uniform-random":
        if args.seed is None:
            raise ValueError("uniform-random needs --seed")
        inst = gen_uniform_random(args.n, args.dim, args.seed, args.extent)
    else:
        if args.seed is None:
            raise ValueError("clustered-plus-outlier needs --seed")
        inst = gen_clustered_plus_outlier(args.n, args.dim, args.seed,
                                          args.spread, args.separation)
    io.save_instance(args.out, inst)
    rm = f"{r_min(inst):.17g}" if inst.n >= 2 else "n/a"
    _print(f"n={inst.n} d={inst.dim} r_min={rm} -> {args.out}")
    return 0


def _build_assignment(inst: Instance, method: str, radius: float | None,
                      input_radii: np.ndarray | None):
    """Returns (radii, model the build is valid in, metadata for the file)."""
    if method == "uniform":
        R = r_min(inst) if radius is None else radius
        return uniform_assignment(inst, R), "symmetric", {"build": {"method": "uniform", "radius": R}}
    if method == "lnn":
        res = lnn(inst)
        return res.radii, "asymmetric", {
            "levels": [int(x) for x in res.levels],
            "rounds": res.rounds,
            "build": {"method": "lnn"},
        }
    # bounded
    R = r_min(inst) if radius is None else radius
    if input_radii is None:
        base = lnn(inst)
        r_in, model = base.radii, "asymmetric"
    else:
        r_in = input_radii
        model = "symmetric" if is_valid(inst, r_in, "symmetric") else "asymmetric"
    out = transform(inst, r_in, R, model=model)
    decomp = decompose(inst, R)
    summary = decomposition_summary(decomp)
    meta = {"build": {
        "method": "bounded",
        "radius": R,
        "input_model": model,
        "clusters": len(summary["clusters"]),
        "leaders": sorted({s for c in summary["clusters"] for s in c["leaders"]}),
        "witness_pairs": [[w["u"], w["v"]] for w in summary["witness_pairs"]],
    }}
    return out, model, meta


def cmd_build(args) -> int:
    inst = io.load_instance(args.instance)
    input_radii = None
    if args.input is not None:
        if args.method != "bounded":
            raise ValueError("--input is only meaningful with --method bounded")
        input_radii, _ = io.load_assignment(args.input)
    radii, model, meta = _build_assignment(inst, args.method, args.radius, input_radii)
    io.save_assignment(args.out, radii, meta)
    desc = {k: v for k, v in meta.get("build", {}).items() if k not in ("witness_pairs", "leaders")}
    _print(f"method={args.method} model={model} max_radius={float(radii.max()):.17g} "
           f"{json.dumps(desc, sort_keys=True)} -> {args.out}")
    return 0


def _analyze(inst: Instance, radii: np.ndarray, mode: str, model: str,
             samples: int, seed: int | None) -> dict:
    rep = network_interference(inst, radii, mode, samples=samples, seed=seed)
    hist_counts, hist_edges = np.histogram(radii, bins=10,
                                           range=(0.0, float(max(radii.max(), 1e-300))))
    return {
        "schema": io.SCHEMA,
        "mode": rep.mode,
        "value": rep.value,
        "witness_point": [float(x) for x in rep.witness_point],
        "candidates_evaluated": rep.candidates_evaluated,
        "model": model,
        "valid": is_valid(inst, radii, model),
        "max_radius": float(radii.max()),
        "radii_histogram": {
            "bin_edges": [float(x) for x in hist_edges],
            "counts": [int(c) for c in hist_counts],
        },
    }


def cmd_analyze(args) -> int:
    inst = io.load_instance(args.instance)
    radii, _ = io.load_assignment(args.assignment)
    mode = args.mode or _default_mode(inst.dim)
    report = _analyze(inst, radii, mode, args.model, args.samples, args.seed)
    if args.out:
        io.write_json(args.out, report)
    _print(f"interference={report['value']} mode={report['mode']} "
           f"valid={report['valid']} ({report['model']}) "
           f"max_radius={report['max_radius']:.17g}")
    return 0


def cmd_compare(args) -> int:
    inst = io.load_instance(args.instance)
    mode = args.mode or _default_mode(inst.dim)
    records = []
    for method in args.methods:
        t0 = time.perf_counter()
        radii, model, _ = _build_assignment(inst, method, args.radius, None)
        rep = network_interference(inst, radii, mode, samples=args.samples, seed=args.seed)
        valid = is_valid(inst, radii, model)
        ms = (time.perf_counter() - t0) * 1000.0
        rec = ExperimentRecord(
            instance_path=str(args.instance), method=method,
            params={"radius": args.radius, "mode": mode},
            metrics={"max_radius": f"{float(radii.max()):.17g}",
                     "interference": rep.value, "valid": valid},
            runtime_ms=ms)
        records.append(rec)
    with open(args.out, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(COMPARE_COLUMNS)
        for rec in records:
            w.writerow(rec.csv_row())
    for rec in records:
        _print(f"{rec.method}: interference={rec.metrics['interference']} "
               f"max_radius={rec.metrics['max_radius']} valid={rec.metrics['valid']}")
    return 0


def cmd_oracle(args) -> int:
    inst = io.load_instance(args.instance)
    if args.what == "min-interference":
        if inst.n > MAX_ORACLE_N:
            raise ValueError(f"n={inst.n} too large for exhaustive search "
                             f"(limit {MAX_ORACLE_N})")
        mode = args.mode or _default_mode(inst.dim)
        value, radii = oracle_min_interference(inst, mode)
        at_sensors = network_interference(inst, radii, "at_sensors").value
        report = {
            "schema": io.SCHEMA, "what": "min-interference", "mode": mode,
            "value": value, "value_at_sensors": at_sensors,
            "assignment": [float(r) for r in radii],
        }
        _print(f"min interference={value} (mode {mode}; at_sensors of witness "
               f"assignment {at_sensors})")
    else:
        if args.assignment is None:
            raise ValueError("max-depth needs --assignment")
        radii, _ = io.load_assignment(args.assignment)
        if args.pitch is not None:
            pitch = args.pitch
        else:
            acc = np.zeros((inst.n, inst.n))
            for k in range(inst.dim):
                diff = inst.points[:, k, None] - inst.points[None, :, k]
                acc += diff * diff
            np.fill_diagonal(acc, np.inf)
            pitch = float(np.sqrt(acc.min())) / 8.0
            if not pitch > 0:
                raise ValueError("degenerate instance: give --pitch explicitly")
        value = oracle_max_depth(inst, radii, pitch)
        report = {"schema": io.SCHEMA, "what": "max-depth", "value": value,
                  "pitch": pitch}
        _print(f"max depth >= {value} at pitch {pitch:.17g}")
    if args.out:
        io.write_json(args.out, report)
    return 0


def cmd_explain(args) -> int:
    inst = io.load_instance(args.instance)
    R = r_min(inst) if args.radius is None else args.radius
    summary = decomposition_summary(decompose(inst, R))
    summary["schema"] = io.SCHEMA
    summary["neighbor_pairs"] = [list(p) for p in summary["neighbor_pairs"]]
    if args.out:
        io.write_json(args.out, summary)
    _print(f"clusters={len(summary['clusters'])} "
           f"witness_pairs={len(summary['witness_pairs'])} cell_side={R:.17g}")
    return 0


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="topoctl",
                                description="topology control experiments")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate an instance file")
    g.add_argument("--kind", required=True,
                   choices=["lower-bound", "uniform-random", "clustered-plus-outlier"])
    g.add_argument("--k", type=int, default=3, help="doubling levels (lower-bound)")
    g.add_argument("--n", type=int, default=32)
    g.add_argument("--dim", type=int, default=2)
    g.add_argument("--seed", type=int, default=None)
    g.add_argument("--extent", type=float, default=1.0)
    g.add_argument("--spread", type=float, default=1.0)
    g.add_argument("--separation", type=float, default=100.0)
    g.add_argument("--out", required=True)
    g.set_defaults(func=cmd_gen)

    b = sub.add_parser("build", help="build a radii assignment")
    b.add_argument("instance")
    b.add_argument("--method", required=True, choices=["uniform", "lnn", "bounded"])
    b.add_argument("--radius", type=float, default=None,
                   help="cap / uniform radius (default: r_min)")
    b.add_argument("--input", default=None,
                   help="input assignment for --method bounded (default: lnn)")
    b.add_argument("--out", required=True)
    b.set_defaults(func=cmd_build)

    a = sub.add_parser("analyze", help="measure an assignment")
    a.add_argument("instance")
    a.add_argument("assignment")
    a.add_argument("--mode", choices=["exact1d", "exact2d", "at_sensors", "sampled"],
                   default=None, help="default: exact mode for d<=2, else at_sensors")
    a.add_argument("--model", choices=["symmetric", "asymmetric"], default="symmetric")
    a.add_argument("--samples", type=int, default=1024)
    a.add_argument("--seed", type=int, default=None)
    a.add_argument("--out", default=None)
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("compare", help="compare construction methods (CSV)")
    c.add_argument("instance")
    c.add_argument("--methods", nargs="+", required=True,
                   choices=["uniform", "lnn", "bounded"])
    c.add_argument("--radius", type=float, default=None)
    c.add_argument("--mode", choices=["exact1d", "exact2d", "at_sensors", "sampled"],
                   default=None)
    c.add_argument("--samples", type=int, default=1024)
    c.add_argument("--seed", type=int, default=None)
    c.add_argument("--out", required=True)
    c.set_defaults(func=cmd_compare)

    o = sub.add_parser("oracle", help="brute-force verification oracles")
    o.add_argument("instance")
    o.add_argument("--what", required=True, choices=["min-interference", "max-depth"])
    o.add_argument("--mode", choices=["exact1d", "exact2d", "at_sensors"], default=None)
    o.add_argument("--assignment", default=None)
    o.add_argument("--pitch", type=float, default=None)
    o.add_argument("--out", default=None)
    o.set_defaults(func=cmd_oracle)

    e = sub.add_parser("explain", help="dump the cluster decomposition")
    e.add_argument("instance")
    e.add_argument("--radius", type=float, default=None)
    e.add_argument("--out", default=None)
    e.set_defaults(func=cmd_explain)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"i/o error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command line front end: verification suites and data-producing demos.

Suite runs write a canonical JSON (or CSV) report and exit 0 exactly when
every check passed; unknown suite names are usage errors (exit 2).  Demos
write CSV/JSON/PBM files for external plotting.  The environment variable
MINKLAB_THREADS caps parallelism of the lattice sweeps; reports are
byte-identical across thread counts and repeated runs.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import lattice as lat
from . import projective, rigid
from .suites import Config, SUITES, parse_grid, run_suite

__all__ = ["main"]

DEMOS = ("rindler", "disk", "fig2", "fl-slab", "image-lines")


def _read_config(path: str | None) -> dict:
    if not path:
        return {}
    out = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"bad config line {raw!r} (expected key=value)")
        key, value = line.split("=", 1)
        out[key.strip()] = value.strip()
    return out


def _report_csv(report: dict) -> str:
    lines = ["name,passed,residual,tolerance,note"]
    for c in report["checks"]:
        note = c["note"].replace(",", ";")
        lines.append(f"{c['name']},{int(c['passed'])},{c['residual']!r},"
                     f"{c['tolerance']!r},{note}")
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_suite(args) -> int:
    mapping = _read_config(args.config)
    if args.grid:
        mapping["grid"] = args.grid
    config = Config.from_mapping(mapping)
    try:
        report = run_suite(args.suite, args.seed, config)
    except KeyError:
        print(f"error: unknown suite {args.suite!r} "
              f"(choose from {', '.join([*SUITES, 'all'])})", file=sys.stderr)
        return 2
    text = (_report_csv(report) if args.format == "csv"
            else json.dumps(report, indent=2, sort_keys=True) + "\n")
    _emit(text, args.out)
    for c in report["checks"]:
        status = "pass" if c["passed"] else "FAIL"
        print(f"[{status}] {c['name']}: residual {c['residual']:.3e} "
              f"(tol {c['tolerance']:.1e})", file=sys.stderr)
    return 0 if report["passed"] else 1


def _parse_range(text: str) -> tuple[float, float]:
    lo, _, hi = text.partition("..")
    return float(lo), float(hi) if hi else float(lo)


def _demo_rindler(args, outdir: Path) -> list[Path]:
    lo, hi = _parse_range(args.x0)
    vf = args.v_final
    labels = np.linspace(lo, hi, args.orbits)
    rows = []
    for x0 in labels:
        tau_final = (x0 / args.c) * np.arctanh(vf / args.c)
        for tau in np.linspace(0.0, tau_final, args.samples):
            rows.append((tau, rigid.boost_killing_flow(float(x0), float(tau), args.c)))
    path = outdir / "rindler_orbits.csv"
    path.write_text(rigid.trajectory_csv(rows))
    return [path]


def _demo_disk(args, outdir: Path) -> list[Path]:
    field = rigid.rotation_killing_field(args.kappa, args.c)
    rows = []
    radii = np.linspace(0.1, 0.9, args.samples) * (args.c / args.kappa)
    for rho in radii:
        event = np.array([0.0, float(rho), 0.0, 0.0])
        dec = rigid.kinematic_decomposition(field, event, 1e-3)
        rows.append((0.0, event, dec.theta_norm, dec.omega_norm, dec.accel_norm_g))
    path = outdir / "disk_field.csv"
    path.write_text(rigid.field_csv(rows))
    return [path]


def _demo_fig2(args, outdir: Path) -> list[Path]:
    grid = lat.IntegerGrid.centered(*parse_grid(args.grid or "41x41"))
    fig = lat.fig2_counterexample(grid)
    paths = []
    for key in ("a", "b", "bprime", "join_a_bprime", "witness"):
        p = outdir / f"fig2_{key}.json"
        p.write_text(lat.region_to_json(fig[key]) + "\n")
        paths.append(p)
        if grid.dim == 2:
            pb = outdir / f"fig2_{key}.pbm"
            pb.write_text(lat.region_to_pbm(fig[key]))
            paths.append(pb)
    summary = outdir / "fig2_summary.json"
    summary.write_text(json.dumps({
        "witness_cells": fig["witness"].count,
        "orthomodular": fig["holds"],
        "chron_analogue_holds": fig["chron_analogue_holds"],
        "chron_edge_aligned_holds": fig["chron_edge_aligned_holds"],
    }, indent=2, sort_keys=True) + "\n")
    paths.append(summary)
    return paths


def _demo_fl_slab(args, outdir: Path) -> list[Path]:
    rng = np.random.default_rng(args.seed)
    R, c = args.R, args.c
    rows = []
    for _ in range(args.samples):
        t = float(rng.uniform(-3 * R / c, 3 * R / c))
        if abs(abs(t) - R / c) < 1e-6:
            continue
        slab = projective.time_slab(t, R, c)
        try:
            tp, _ = projective.deformation_phi(R, c, t, np.zeros(3))
        except projective.SingularHyperplaneError:
            continue
        rows.append({"t": t, "slab": slab, "t_image": tp})
    path = outdir / "fl_slab.json"
    path.write_text(json.dumps({"R": R, "c": c, "rows": rows},
                               indent=2, sort_keys=True) + "\n")
    return [path]


def _demo_image_lines(args, outdir: Path) -> list[Path]:
    sigmas = [float(s) for s in args.sigmas.split(",")]
    demo = projective.parallelism_breaking_demo(sigmas)
    lines = ["sigma,dir_t,dir_x"]
    for s, d in demo["directions"].items():
        lines.append(f"{s!r},{d[0]!r},{d[1]!r}")
    path = outdir / "image_line_directions.csv"
    path.write_text("\n".join(lines) + "\n")
    return [path]


def _cmd_demo(args) -> int:
    outdir = Path(args.out or ".")
    outdir.mkdir(parents=True, exist_ok=True)
    runner = {
        "rindler": _demo_rindler,
        "disk": _demo_disk,
        "fig2": _demo_fig2,
        "fl-slab": _demo_fl_slab,
        "image-lines": _demo_image_lines,
    }[args.name]
    for p in runner(args, outdir):
        print(p, file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minklab",
        description="Verification suites and demos for flat-spacetime geometry.")
    parser.add_argument("--suite", help=f"run a suite: {', '.join([*SUITES, 'all'])}")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--config", help="key=value config file")
    parser.add_argument("--out", help="output path (suite report or demo dir)")
    parser.add_argument("--grid", help="lattice grid size, e.g. 41x41")
    fmt = parser.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    fmt.add_argument("--csv", dest="format", action="store_const", const="csv")
    parser.set_defaults(format="json")

    sub = parser.add_subparsers(dest="command")
    demo = sub.add_parser("demo", help="write demo data files")
    demo.add_argument("name", choices=DEMOS)
    demo.add_argument("--out", help="output directory (default: cwd)")
    demo.add_argument("--grid", help="grid for the lattice demo, e.g. 61x61")
    demo.add_argument("--seed", type=int, default=0)
    demo.add_argument("--samples", type=int, default=200)
    demo.add_argument("--x0", default="1..2", help="orbit label range lo..hi")
    demo.add_argument("--v-final", dest="v_final", type=float, default=0.5)
    demo.add_argument("--orbits", type=int, default=5)
    demo.add_argument("--kappa", type=float, default=1.0)
    demo.add_argument("--c", type=float, default=1.0)
    demo.add_argument("--R", type=float, default=10.0)
    demo.add_argument("--sigmas", default="0,1,2")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "demo":
        return _cmd_demo(args)
    if not args.suite:
        parser.print_usage(sys.stderr)
        print("error: either --suite NAME or a demo subcommand is required",
              file=sys.stderr)
        return 2
    return _cmd_suite(args)


if __name__ == "__main__":
    sys.exit(main())

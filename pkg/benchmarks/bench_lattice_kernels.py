"""Benchmark the grid-lattice complement backends.

Compares the compiled early-exit kernel, the numpy relation-table path and
the block-broadcast fallback on identical seeded workloads, and verifies
bit-identity while at it.  Run with:

    python benchmarks/bench_lattice_kernels.py [--grid 41x41] [--regions 200]
"""

import argparse
import time

import numpy as np

from minklab.lattice import IntegerGrid, Region, random_region
from minklab.lattice import _kernels_py
from minklab.lattice.engine import _kernels
from minklab.suites import parse_grid


def bench(label, fn, workload):
    # warm-up pass also collects the outputs used for the identity check
    outputs = [np.asarray(fn(r)) for r in workload]
    t0 = time.perf_counter()
    for r in workload:
        fn(r)
    dt = time.perf_counter() - t0
    print(f"{label:<26} {1e3 * dt / len(workload):8.3f} ms/complement "
          f"({len(workload) / dt:8.1f} ops/s)")
    return outputs


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--grid", default="41x41")
    parser.add_argument("--regions", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--mode", type=int, default=0, choices=(0, 1, 2))
    args = parser.parse_args()

    grid = IntegerGrid.centered(*parse_grid(args.grid))
    rng = np.random.default_rng(args.seed)
    workload = [random_region(grid, rng) for _ in range(args.regions)]
    code = args.mode
    print(f"grid {args.grid} ({grid.size} cells), {args.regions} regions, "
          f"mode {code}")

    compiled_available = _kernels is not _kernels_py
    results = {}
    if compiled_available:
        results["compiled"] = bench(
            "compiled kernel", lambda r: _kernels.complement_mask(
                grid.coords, grid.coords[r.mask], code), workload)
    else:
        print("compiled kernel            unavailable (extension not built)")

    rel = grid.relation_matrix(code)
    if rel is not None:
        results["table"] = bench(
            "numpy relation table", lambda r: ~rel[:, np.flatnonzero(r.mask)].any(axis=1),
            workload)
    results["broadcast"] = bench(
        "numpy block broadcast", lambda r: _kernels_py.complement_mask(
            grid.coords, grid.coords[r.mask], code), workload)

    names = list(results)
    base = results[names[0]]
    for other in names[1:]:
        same = all(np.array_equal(a, b) for a, b in zip(base, results[other]))
        print(f"bit-identical {names[0]} vs {other}: {same}")
        if not same:
            raise SystemExit(1)


if __name__ == "__main__":
    main()

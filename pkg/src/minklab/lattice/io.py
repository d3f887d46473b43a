"""Region serialisation: run-length-encoded rows in JSON, PBM bitmaps.

JSON schema (stable, versioned):

    {
      "schema_version": 1,
      "dim": 2,
      "extents": [[t_lo, t_hi], [x_lo, x_hi], ...],
      "rows": [[row_key, [start, length], ...], ...]
    }

Rows run along the last axis; `row_key` lists the leading coordinates of
the row and is present only for non-empty rows.  `start` is the coordinate
value on the last axis where a run of member cells begins.  The PBM export
(n = 2 only) writes plain P1 with one image row per time value, smallest
time first, and x increasing left to right.
"""

from __future__ import annotations

import json
from itertools import product

import numpy as np

from .grid import IntegerGrid, Region

__all__ = ["region_to_json", "region_from_json", "region_to_pbm"]

SCHEMA_VERSION = 1


def region_to_json(region: Region) -> str:
    grid = region.grid
    nd = region.mask.reshape(grid.shape)
    rows = []
    lead_ranges = [range(lo, hi + 1) for lo, hi in grid.extents[:-1]]
    last_lo = grid.extents[-1][0]
    for lead in product(*lead_ranges):
        idx = tuple(c - lo for c, (lo, _) in zip(lead, grid.extents[:-1]))
        line = nd[idx]
        runs = _encode_runs(line, last_lo)
        if runs:
            rows.append([list(lead)] + runs)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "dim": grid.dim,
        "extents": [list(e) for e in grid.extents],
        "rows": rows,
    }
    return json.dumps(doc, separators=(",", ":"), sort_keys=True)


def _encode_runs(line: np.ndarray, offset: int) -> list[list[int]]:
    runs = []
    start = None
    for i, v in enumerate(line.tolist() + [False]):
        if v and start is None:
            start = i
        elif not v and start is not None:
            runs.append([offset + start, i - start])
            start = None
    return runs


def region_from_json(text: str) -> Region:
    doc = json.loads(text)
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {doc.get('schema_version')!r}")
    grid = IntegerGrid([tuple(e) for e in doc["extents"]])
    nd = np.zeros(grid.shape, dtype=bool)
    last_lo = grid.extents[-1][0]
    for row in doc["rows"]:
        lead, runs = row[0], row[1:]
        idx = tuple(c - lo for c, (lo, _) in zip(lead, grid.extents[:-1]))
        for start, length in runs:
            nd[idx][start - last_lo:start - last_lo + length] = True
    return Region(grid, nd.reshape(-1))


def region_to_pbm(region: Region) -> str:
    """Plain PBM (P1) bitmap of a 2-d region for visual inspection."""
    grid = region.grid
    if grid.dim != 2:
        raise ValueError("PBM export is for 2-d grids only")
    nd = region.mask.reshape(grid.shape)
    height, width = nd.shape
    lines = [f"P1", f"{width} {height}"]
    for row in nd:
        lines.append(" ".join("1" if v else "0" for v in row))
    return "\n".join(lines) + "\n"

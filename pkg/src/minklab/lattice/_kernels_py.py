"""Reference kernels for the grid-lattice engine, without compiled code.

`complement_mask` is the numpy production fallback: block-broadcast exact
int64 interval tests, bit-identical to the loops.  `complement_mask_bruteforce`
is the plain double loop kept as the oracle that every accelerated path is
compared against.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"

_BLOCK = 2048


def _related(d0: np.ndarray, sp2: np.ndarray, mode: int) -> np.ndarray:
    same = (d0 == 0) & (sp2 == 0)
    if mode == 0:  # strictly spacelike separation required
        return d0 * d0 - sp2 >= 0
    if mode == 1:  # non-timelike separation of disjoint sets
        return (d0 * d0 - sp2 > 0) | same
    if mode == 2:  # finite-speed reachability: any time difference
        return (d0 != 0) | same
    raise ValueError(f"unknown mode code {mode}")


def complement_mask(cand_coords: np.ndarray, sel_coords: np.ndarray, mode: int) -> np.ndarray:
    """Candidates related (per mode) to no cell of the selected set."""
    cand = np.asarray(cand_coords, dtype=np.int64)
    sel = np.asarray(sel_coords, dtype=np.int64)
    n = cand.shape[0]
    if sel.shape[0] == 0:
        return np.ones(n, dtype=bool)
    out = np.empty(n, dtype=bool)
    for start in range(0, n, _BLOCK):
        rows = cand[start:start + _BLOCK]
        d0 = rows[:, 0][:, None] - sel[:, 0][None, :]
        sp2 = np.zeros_like(d0)
        for axis in range(1, cand.shape[1]):
            d = rows[:, axis][:, None] - sel[:, axis][None, :]
            sp2 += d * d
        out[start:start + _BLOCK] = ~_related(d0, sp2, mode).any(axis=1)
    return out


def complement_mask_bruteforce(coords: np.ndarray, mask: np.ndarray, mode: int) -> np.ndarray:
    """Unoptimised oracle: literal O(grid * set) double loop with exact ints."""
    pts = [tuple(int(c) for c in row) for row in coords]
    sel = [p for p, inside in zip(pts, mask) if inside]
    out = np.zeros(len(pts), dtype=bool)
    for i, p in enumerate(pts):
        ok = True
        for s in sel:
            d0 = p[0] - s[0]
            sp2 = 0
            for a in range(1, len(p)):
                d = p[a] - s[a]
                sp2 += d * d
            interval = d0 * d0 - sp2
            same = p == s
            if mode == 0:
                related = interval >= 0
            elif mode == 1:
                related = interval > 0 or same
            else:
                related = d0 != 0 or same
            if related:
                ok = False
                break
        out[i] = ok
    return out

"""Complement, completion, meet and join on grid regions.

The inner sweep (grid x set relation tests) dominates the runtime of every
law check, so it is backed by a compiled kernel when the extension built,
with a numpy fallback selected at import time.  Both produce bit-identical
masks; MINKLAB_THREADS > 1 splits sweeps into row chunks whose results are
concatenated in order, so the output does not depend on the thread count.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import _kernels_py
from .grid import GALILEI, IntegerGrid, Region, mode_code

try:  # compiled fast path; the fallback is feature-identical
    from . import _speedups as _kernels  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on the build environment
    _kernels = _kernels_py

__all__ = [
    "backend_name",
    "complement",
    "completion",
    "is_complete",
    "meet",
    "join",
    "diamond",
    "de_morgan_check",
    "orthomodularity_check",
    "galilei_chron_complement",
]


def backend_name() -> str:
    """Which kernel implementation complement() dispatches to."""
    if os.environ.get("MINKLAB_FORCE_PY_KERNELS"):
        return _kernels_py.BACKEND
    return _kernels.BACKEND


def _thread_count() -> int:
    raw = os.environ.get("MINKLAB_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _complement_mask(region: Region, code: int) -> np.ndarray:
    """Backend dispatch for one complement sweep, optionally row-chunked.

    The compiled kernel loops with early exit; the numpy path slices a
    cached pairwise relation table (block-broadcast beyond the cache
    limit).  All paths are bit-identical and row chunks make the result
    independent of the thread count by construction.
    """
    grid = region.grid
    coords = grid.coords
    compiled = _kernels is not _kernels_py and not os.environ.get(
        "MINKLAB_FORCE_PY_KERNELS")
    rel = None if compiled else grid.relation_matrix(code)
    sel = None if rel is not None else np.ascontiguousarray(coords[region.mask])
    idx = np.flatnonzero(region.mask) if rel is not None else None

    def sweep(lo: int, hi: int) -> np.ndarray:
        if rel is not None:
            if idx.size == 0:
                return np.ones(hi - lo, dtype=bool)
            return ~rel[lo:hi][:, idx].any(axis=1)
        kern = _kernels.complement_mask if compiled else _kernels_py.complement_mask
        return kern(np.ascontiguousarray(coords[lo:hi]), sel, code)

    threads = _thread_count()
    if threads == 1 or grid.size < 2048:
        return sweep(0, grid.size)
    bounds = np.linspace(0, grid.size, threads + 1, dtype=int)
    spans = [(a, b) for a, b in zip(bounds, bounds[1:]) if b > a]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(lambda ab: sweep(*ab), spans))
    return np.concatenate(parts)


def complement(region: Region, mode: str) -> Region:
    """Largest region separated (per mode) from every cell of the input.

    The result is grid-relative: true complements are unbounded, so regions
    near the grid boundary (see Region.near_boundary) see a truncated one.
    """
    return Region(region.grid, _complement_mask(region, mode_code(mode)))


def completion(region: Region, mode: str) -> Region:
    """Double complement: the smallest complete superset of the region."""
    return complement(complement(region, mode), mode)


def is_complete(region: Region, mode: str) -> bool:
    return completion(region, mode) == region


def meet(s1: Region, s2: Region, mode: str) -> Region:
    """Greatest lower bound; equals the intersection for complete inputs."""
    del mode  # the intersection of complete regions is complete in every mode
    return s1 & s2


def join(s1: Region, s2: Region, mode: str) -> Region:
    """Least upper bound of complete regions: (s1' intersect s2')'."""
    return complement(complement(s1, mode) & complement(s2, mode), mode)


def diamond(grid: IntegerGrid, p, q, closed: bool = True) -> Region:
    """Double-cone intersection region spanned by events p and q.

    Closed uses non-strict interval inequalities, open strict ones; for
    p = q the closed variant is the single point and the open one is empty.
    The two cone orderings are both tried, so the argument order of p and q
    does not matter.
    """
    coords = grid.coords
    pa = np.asarray(p, dtype=np.int64)
    qa = np.asarray(q, dtype=np.int64)

    def cone_between(lo, hi):
        d1 = coords - lo[None, :]
        d2 = hi[None, :] - coords
        i1 = d1[:, 0] ** 2 - (d1[:, 1:] ** 2).sum(axis=1)
        i2 = d2[:, 0] ** 2 - (d2[:, 1:] ** 2).sum(axis=1)
        if closed:
            return (i1 >= 0) & (d1[:, 0] >= 0) & (i2 >= 0) & (d2[:, 0] >= 0)
        return (i1 > 0) & (d1[:, 0] > 0) & (i2 > 0) & (d2[:, 0] > 0)

    return Region(grid, cone_between(pa, qa) | cone_between(qa, pa))


def de_morgan_check(pairs, mode: str) -> list[tuple[int, str]]:
    """Dual-law violations over (complete, complete) region pairs.

    For each pair checks (a meet b)' = a' join b' and (a join b)' = a' meet
    b', with joins computed as completions of unions so the identity is not
    circular.  Returns (pair index, law tag) entries; empty means all hold.
    """
    violations = []
    for idx, (a, b) in enumerate(pairs):
        ac, bc = complement(a, mode), complement(b, mode)
        lhs1 = complement(a & b, mode)
        rhs1 = completion(ac | bc, mode)
        if lhs1 != rhs1:
            violations.append((idx, "meet-complement"))
        lhs2 = complement(completion(a | b, mode), mode)
        rhs2 = ac & bc
        if lhs2 != rhs2:
            violations.append((idx, "join-complement"))
    return violations


def orthomodularity_check(a: Region, b: Region, mode: str) -> dict:
    """Test a = b meet (a join b') for complete a <= b.

    Returns holds plus the witness region b meet (a join b') minus a, which
    is nonempty exactly when the law fails.
    """
    if not a <= b:
        raise ValueError("orthomodularity check needs a <= b")
    if not (is_complete(a, mode) and is_complete(b, mode)):
        raise ValueError("orthomodularity check needs complete inputs")
    rhs = meet(b, join(a, complement(b, mode), mode), mode)
    witness = rhs - a
    return {"holds": rhs == a, "witness": witness}


def galilei_chron_complement(region: Region) -> Region:
    """Finite-speed analogue of the chronological complement.

    With a finite-speed reachability relation, two distinct events are
    unrelated exactly when they are simultaneous; the complement of a set
    spanning more than one time slice is therefore empty, and the complete
    sets are the proper subsets of single slices (plus the empty and full
    regions).
    """
    return complement(region, GALILEI)

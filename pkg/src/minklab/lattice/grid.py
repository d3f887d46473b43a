"""Integer event grids and bitset regions.

Squared intervals between grid events are computed in exact integer
arithmetic, so every lattice law in this package is checked bit-exactly:
there is no tolerance anywhere.  Region membership is a flat boolean mask
over the grid cells in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "CAUSAL",
    "CHRONOLOGICAL",
    "GALILEI",
    "MODES",
    "IntegerGrid",
    "Region",
]

CAUSAL = "causal"
CHRONOLOGICAL = "chronological"
GALILEI = "galilei"
MODES = (CAUSAL, CHRONOLOGICAL, GALILEI)

_MODE_CODE = {CAUSAL: 0, CHRONOLOGICAL: 1, GALILEI: 2}


def mode_code(mode: str) -> int:
    if mode not in _MODE_CODE:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    return _MODE_CODE[mode]


@dataclass(frozen=True, eq=False)
class IntegerGrid:
    """Finite box of integer events, time axis first."""

    extents: tuple[tuple[int, int], ...]

    def __init__(self, extents: Sequence[Sequence[int]]):
        ext = tuple((int(lo), int(hi)) for lo, hi in extents)
        if len(ext) not in (2, 3):
            raise ValueError("grid dimension must be 2 or 3")
        for lo, hi in ext:
            if hi < lo:
                raise ValueError("empty axis range")
        object.__setattr__(self, "extents", ext)

    @classmethod
    def centered(cls, *sizes: int) -> "IntegerGrid":
        """Grid of the given per-axis cell counts, centred on the origin."""
        return cls([(-(s // 2), s - 1 - s // 2) for s in sizes])

    @property
    def dim(self) -> int:
        return len(self.extents)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(hi - lo + 1 for lo, hi in self.extents)

    @property
    def size(self) -> int:
        return int(np.prod(self.shape))

    @cached_property
    def coords(self) -> np.ndarray:
        """(size, dim) int64 array of cell coordinates, lexicographic order."""
        axes = [np.arange(lo, hi + 1, dtype=np.int64) for lo, hi in self.extents]
        mesh = np.meshgrid(*axes, indexing="ij")
        return np.ascontiguousarray(
            np.stack([m.reshape(-1) for m in mesh], axis=1))

    # pairwise relation tables back the numpy complement path; ~N^2 bools
    _RELATION_CELL_LIMIT = 7000

    def relation_matrix(self, mode_code_: int) -> np.ndarray | None:
        """Cached N x N table of the mode's relation; None for large grids."""
        if self.size > self._RELATION_CELL_LIMIT:
            return None
        cache = self.__dict__.setdefault("_relation_cache", {})
        got = cache.get(mode_code_)
        if got is None:
            c = self.coords
            d0 = c[:, 0][:, None] - c[:, 0][None, :]
            sp2 = np.zeros_like(d0)
            for axis in range(1, self.dim):
                d = c[:, axis][:, None] - c[:, axis][None, :]
                sp2 += d * d
            same = np.eye(self.size, dtype=bool)
            if mode_code_ == 0:
                got = d0 * d0 - sp2 >= 0
            elif mode_code_ == 1:
                got = (d0 * d0 - sp2 > 0) | same
            elif mode_code_ == 2:
                got = (d0 != 0) | same
            else:
                raise ValueError(f"unknown mode code {mode_code_}")
            cache[mode_code_] = got
        return got

    def index_of(self, point: Sequence[int]) -> int:
        p = tuple(int(c) for c in point)
        if len(p) != self.dim or not all(lo <= c <= hi for c, (lo, hi) in zip(p, self.extents)):
            raise ValueError(f"point {p} outside grid")
        idx = 0
        for c, (lo, hi) in zip(p, self.extents):
            idx = idx * (hi - lo + 1) + (c - lo)
        return idx

    def interval2(self, p: Sequence[int], q: Sequence[int]) -> int:
        """Exact squared interval (p-q)^2 = dt^2 - |dx|^2."""
        d = [int(a) - int(b) for a, b in zip(p, q)]
        return d[0] * d[0] - sum(x * x for x in d[1:])

    def __repr__(self) -> str:
        return f"IntegerGrid({list(self.extents)})"


@dataclass(frozen=True, eq=False)
class Region:
    """Subset of a grid as a flat boolean mask."""

    grid: IntegerGrid
    mask: np.ndarray

    def __init__(self, grid: IntegerGrid, mask: np.ndarray):
        m = np.asarray(mask, dtype=bool).reshape(-1)
        if m.size != grid.size:
            raise ValueError("mask length must equal the grid cell count")
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "mask", m)

    # constructors -------------------------------------------------------
    @classmethod
    def empty(cls, grid: IntegerGrid) -> "Region":
        return cls(grid, np.zeros(grid.size, dtype=bool))

    @classmethod
    def full(cls, grid: IntegerGrid) -> "Region":
        return cls(grid, np.ones(grid.size, dtype=bool))

    @classmethod
    def from_points(cls, grid: IntegerGrid, points: Iterable[Sequence[int]]) -> "Region":
        m = np.zeros(grid.size, dtype=bool)
        for p in points:
            m[grid.index_of(p)] = True
        return cls(grid, m)

    # set algebra (exact) --------------------------------------------------
    def _check_same_grid(self, other: "Region") -> None:
        if self.grid is not other.grid and self.grid.extents != other.grid.extents:
            raise ValueError("regions live on different grids")

    def __and__(self, other: "Region") -> "Region":
        self._check_same_grid(other)
        return Region(self.grid, self.mask & other.mask)

    def __or__(self, other: "Region") -> "Region":
        self._check_same_grid(other)
        return Region(self.grid, self.mask | other.mask)

    def __sub__(self, other: "Region") -> "Region":
        self._check_same_grid(other)
        return Region(self.grid, self.mask & ~other.mask)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Region):
            return NotImplemented
        self._check_same_grid(other)
        return bool(np.array_equal(self.mask, other.mask))

    def __le__(self, other: "Region") -> bool:
        self._check_same_grid(other)
        return bool(np.all(~self.mask | other.mask))

    def __hash__(self):
        return hash((self.grid.extents, self.mask.tobytes()))

    @property
    def count(self) -> int:
        return int(self.mask.sum())

    @property
    def is_empty(self) -> bool:
        return not bool(self.mask.any())

    def points(self) -> list[tuple[int, ...]]:
        return [tuple(int(x) for x in row) for row in self.grid.coords[self.mask]]

    def near_boundary(self, margin: int | None = None) -> bool:
        """Whether any member cell is within `margin` of a grid face.

        Complements are grid-relative, so regions hugging the boundary see a
        truncated complement; default margin is a quarter of the largest
        axis span.
        """
        if self.is_empty:
            return False
        if margin is None:
            margin = max(hi - lo for lo, hi in self.grid.extents) // 4
        coords = self.grid.coords[self.mask]
        for axis, (lo, hi) in enumerate(self.grid.extents):
            edge = np.minimum(coords[:, axis] - lo, hi - coords[:, axis])
            if bool((edge < margin).any()):
                return True
        return False

    def __repr__(self) -> str:
        return f"Region(count={self.count}, grid={self.grid!r})"

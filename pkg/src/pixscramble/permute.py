"""Transpose + column-major reshape position scramble on a single plane.

A plane of shape ``(m, n)`` is transposed to ``(n, m)`` and then re-read in
column-major order as an ``(m, n)`` matrix again. Values move, none change.

Planes are stored row-major; column-major order only exists inside this
module, where every flatten and refill names its order explicitly.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ShapeError
from .raster import ChannelPlane


def transpose(plane: ChannelPlane) -> ChannelPlane:
    return ChannelPlane(plane.values.T)


def reshape_column_major(plane: ChannelPlane, rows: int, cols: int) -> ChannelPlane:
    """Refill ``plane`` into ``(rows, cols)`` keeping its column-major sequence."""
    if rows < 1 or cols < 1 or rows * cols != plane.values.size:
        raise ShapeError(f"cannot reshape {plane.shape} plane into ({rows}, {cols})")
    column_major = plane.values.ravel(order="F")
    return ChannelPlane(column_major.reshape((rows, cols), order="F"))


def scramble_plane(plane: ChannelPlane) -> ChannelPlane:
    # the reshape target is the size taken *before* the transpose
    m, n = plane.shape
    return reshape_column_major(transpose(plane), m, n)


def unscramble_plane(plane: ChannelPlane) -> ChannelPlane:
    m, n = plane.shape
    return transpose(reshape_column_major(plane, n, m))


@dataclass(frozen=True)
class PositionPermutation:
    """Explicit bijection realising :func:`scramble_plane` on flat indices.

    Indices are column-major: the element at row ``i``, column ``j`` of an
    ``(m, n)`` plane has flat index ``i + j*m``. ``map[k]`` is where the
    element at source index ``k`` lands.
    """

    m: int
    n: int
    map: tuple[int, ...]

    def __post_init__(self):
        if len(self.map) != self.m * self.n:
            raise ShapeError(f"map has {len(self.map)} entries, expected {self.m * self.n}")

    def as_array(self) -> np.ndarray:
        return np.asarray(self.map, dtype=np.intp)

    def is_bijection(self) -> bool:
        return sorted(self.map) == list(range(self.m * self.n))

    def inverse(self) -> PositionPermutation:
        inv = np.empty(len(self.map), dtype=np.intp)
        inv[self.as_array()] = np.arange(len(self.map))
        return PositionPermutation(self.m, self.n, tuple(int(k) for k in inv))

    def apply_flat(self, flat):
        """Move ``flat[k]`` to position ``map[k]``; works on any 1-D array."""
        flat = np.asarray(flat)
        if flat.shape != (len(self.map),):
            raise ShapeError(f"expected {len(self.map)} values, got shape {flat.shape}")
        out = np.empty_like(flat)
        out[self.as_array()] = flat
        return out

    def apply(self, plane: ChannelPlane) -> ChannelPlane:
        if plane.shape != (self.m, self.n):
            raise ShapeError(f"permutation is for {(self.m, self.n)} planes, got {plane.shape}")
        moved = self.apply_flat(plane.values.ravel(order="F"))
        return ChannelPlane(moved.reshape((self.m, self.n), order="F"))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycle decomposition, fixed points included, each starting at its smallest index."""
        seen = [False] * len(self.map)
        out = []
        for start in range(len(self.map)):
            if seen[start]:
                continue
            cycle = []
            k = start
            while not seen[k]:
                seen[k] = True
                cycle.append(k)
                k = self.map[k]
            out.append(tuple(cycle))
        return out


def scramble_permutation(m: int, n: int) -> PositionPermutation:
    """Closed form of the scramble: ``map[i + j*m] = j + i*n``."""
    if m < 1 or n < 1:
        raise ShapeError(f"plane dims must be positive, got ({m}, {n})")
    i, j = np.meshgrid(np.arange(m), np.arange(n), indexing="ij")
    dest = np.empty(m * n, dtype=np.intp)
    dest[(i + j * m).ravel()] = (j + i * n).ravel()
    return PositionPermutation(m, n, tuple(int(k) for k in dest))

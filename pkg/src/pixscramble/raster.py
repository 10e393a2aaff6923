"""In-memory raster model: RGB images, rectangular regions and channel planes.

All containers hold read-only numpy arrays, so every operation returns a new
value and nothing is mutated in place.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import RegionBoundsError, ShapeError

_REGION_RE = re.compile(r"^\s*(\d+)\s*:\s*(\d+)\s*,\s*(\d+)\s*:\s*(\d+)\s*$")


def _frozen_uint8(values, ndim: int, what: str) -> np.ndarray:
    arr = np.asarray(values)
    if arr.ndim != ndim:
        raise ShapeError(f"{what} must be {ndim}-dimensional, got shape {arr.shape}")
    if arr.dtype.kind not in "biuf":
        raise ValueError(f"{what} values must be integers in [0, 255], got dtype {arr.dtype}")
    if arr.dtype != np.uint8 and arr.size:
        if arr.min() < 0 or arr.max() > 255:
            raise ValueError(f"{what} values must lie in [0, 255]")
        if arr.dtype.kind == "f" and not np.all(np.mod(arr, 1) == 0):
            raise ValueError(f"{what} values must be integers in [0, 255]")
    arr = arr.astype(np.uint8, copy=True)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class RasterImage:
    """An 8-bit RGB raster stored as a read-only ``(height, width, 3)`` array."""

    pixels: np.ndarray

    def __post_init__(self):
        arr = _frozen_uint8(self.pixels, 3, "image")
        if arr.shape[2] != 3:
            raise ShapeError(f"image must have 3 channels, got {arr.shape[2]}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ShapeError(f"image must be at least 1x1, got {arr.shape[1]}x{arr.shape[0]}")
        object.__setattr__(self, "pixels", arr)

    @classmethod
    def from_flat(cls, width: int, height: int, triples: Iterable[Sequence[int]]) -> RasterImage:
        """Build an image from a row-major sequence of ``(r, g, b)`` triples."""
        arr = np.asarray(list(triples))
        if arr.shape != (width * height, 3):
            raise ShapeError(
                f"expected {width * height} RGB triples for {width}x{height}, got shape {arr.shape}"
            )
        return cls(arr.reshape(height, width, 3))

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    def flat_pixels(self) -> list[tuple[int, int, int]]:
        return [tuple(int(c) for c in px) for px in self.pixels.reshape(-1, 3)]

    def total(self) -> int:
        return int(self.pixels.sum(dtype=np.int64))

    def __eq__(self, other):
        if not isinstance(other, RasterImage):
            return NotImplemented
        return np.array_equal(self.pixels, other.pixels)

    def __repr__(self):
        return f"RasterImage(width={self.width}, height={self.height})"


@dataclass(frozen=True)
class Region:
    """Rectangular window, 0-based and half-open on both axes, rows first."""

    row_start: int
    row_end: int
    col_start: int
    col_end: int

    def __post_init__(self):
        for name in ("row_start", "row_end", "col_start", "col_end"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise TypeError(f"{name} must be an int, got {value!r}")
            object.__setattr__(self, name, int(value))
        if self.row_start < 0 or self.row_end <= self.row_start:
            raise RegionBoundsError(
                f"empty or negative row range {self.row_start}..{self.row_end}", axis="rows"
            )
        if self.col_start < 0 or self.col_end <= self.col_start:
            raise RegionBoundsError(
                f"empty or negative column range {self.col_start}..{self.col_end}", axis="cols"
            )

    @classmethod
    def from_matlab(cls, row_first: int, row_last: int, col_first: int, col_last: int) -> Region:
        """Convert MATLAB-style 1-based inclusive ranges ``a:b`` to ``[a-1, b)``.

        ``Region.from_matlab(55, 136, 62, 124)`` is ``Region(54, 136, 61, 124)``.
        """
        return cls(row_first - 1, row_last, col_first - 1, col_last)

    @classmethod
    def parse(cls, text: str) -> Region:
        """Parse the ``R0:R1,C0:C1`` flag grammar."""
        match = _REGION_RE.match(text)
        if not match:
            raise ValueError(f"bad region {text!r}, expected R0:R1,C0:C1")
        return cls(*(int(g) for g in match.groups()))

    @classmethod
    def full(cls, image: RasterImage) -> Region:
        return cls(0, image.height, 0, image.width)

    @property
    def m(self) -> int:
        return self.row_end - self.row_start

    @property
    def n(self) -> int:
        return self.col_end - self.col_start

    @property
    def shape(self) -> tuple[int, int]:
        return (self.m, self.n)

    def check_fits(self, height: int, width: int) -> None:
        if self.row_end > height:
            raise RegionBoundsError(
                f"region rows {self.row_start}:{self.row_end} exceed image height {height}",
                axis="rows",
            )
        if self.col_end > width:
            raise RegionBoundsError(
                f"region cols {self.col_start}:{self.col_end} exceed image width {width}",
                axis="cols",
            )

    def slices(self) -> tuple[slice, slice]:
        return slice(self.row_start, self.row_end), slice(self.col_start, self.col_end)

    def __str__(self):
        return f"{self.row_start}:{self.row_end},{self.col_start}:{self.col_end}"


@dataclass(frozen=True, eq=False)
class ChannelPlane:
    """One colour component of a region as a read-only ``(m, n)`` uint8 matrix."""

    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen_uint8(self.values, 2, "plane"))

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape

    @property
    def m(self) -> int:
        return self.values.shape[0]

    @property
    def n(self) -> int:
        return self.values.shape[1]

    def tolist(self) -> list[list[int]]:
        return self.values.tolist()

    def __eq__(self, other):
        if not isinstance(other, ChannelPlane):
            return NotImplemented
        return np.array_equal(self.values, other.values)

    def __repr__(self):
        if self.values.size <= 16:
            return f"ChannelPlane({self.values.tolist()})"
        return f"ChannelPlane(shape={self.shape})"


@dataclass(frozen=True)
class ChannelTriple:
    """The red, green and blue planes of one region; all share ``(m, n)``."""

    r: ChannelPlane
    g: ChannelPlane
    b: ChannelPlane

    def __post_init__(self):
        if not (self.r.shape == self.g.shape == self.b.shape):
            raise ShapeError(
                f"channel planes differ in shape: {self.r.shape}, {self.g.shape}, {self.b.shape}"
            )

    @classmethod
    def from_array(cls, arr) -> ChannelTriple:
        arr = np.asarray(arr)
        if arr.ndim != 3 or arr.shape[2] != 3:
            raise ShapeError(f"expected an (m, n, 3) array, got shape {arr.shape}")
        return cls(ChannelPlane(arr[..., 0]), ChannelPlane(arr[..., 1]), ChannelPlane(arr[..., 2]))

    @property
    def shape(self) -> tuple[int, int]:
        return self.r.shape

    def planes(self) -> tuple[ChannelPlane, ChannelPlane, ChannelPlane]:
        return (self.r, self.g, self.b)

    def to_array(self) -> np.ndarray:
        return np.stack([p.values for p in self.planes()], axis=-1)


def extract_region(image: RasterImage, region: Region) -> ChannelTriple:
    region.check_fits(image.height, image.width)
    rows, cols = region.slices()
    return ChannelTriple.from_array(image.pixels[rows, cols, :])


def insert_region(image: RasterImage, region: Region, triple: ChannelTriple) -> RasterImage:
    """Return a copy of ``image`` with ``triple`` written into ``region``."""
    region.check_fits(image.height, image.width)
    if triple.shape != region.shape:
        raise ShapeError(f"triple shape {triple.shape} does not match region shape {region.shape}")
    out = image.pixels.copy()
    rows, cols = region.slices()
    out[rows, cols, :] = triple.to_array()
    return RasterImage(out)

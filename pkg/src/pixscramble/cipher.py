"""Encrypt and decrypt a rectangular image region.

Each channel plane of the region is scrambled with the transpose-reshape
permutation, then the three scrambled planes are optionally reassigned to
different output channels. Nothing here is keyed: the whole transform is
fixed by the region size and the channel permutation, so it masks content
reversibly but offers no secrecy against anyone who knows the method.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import MetadataError
from .permute import scramble_plane, unscramble_plane
from .raster import ChannelTriple, RasterImage, Region, extract_region, insert_region

FORMAT_VERSION = 1
ALGORITHM = "transpose-reshape"

_CHANNEL_INDEX = {"r": 0, "g": 1, "b": 2}


class ChannelPermutation(enum.Enum):
    """Reassignment of the three planes to output channels.

    The value spells which input channel feeds output R, G and B in turn:
    ``GBR`` writes the input green plane to R, blue to G and red to B.
    """

    IDENTITY = "rgb"
    GBR = "gbr"
    BRG = "brg"
    RBG = "rbg"
    GRB = "grb"
    BGR = "bgr"

    @property
    def label(self) -> str:
        """Canonical ASCII name used on the command line and in sidecars."""
        return "identity" if self is ChannelPermutation.IDENTITY else f"rgb2{self.value}"

    @property
    def sources(self) -> tuple[int, int, int]:
        return tuple(_CHANNEL_INDEX[c] for c in self.value)

    @classmethod
    def from_name(cls, name: str) -> ChannelPermutation:
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower()
        for sep in ("→", "->", "2"):
            if key.startswith("rgb" + sep):
                key = key[len("rgb" + sep):]
                break
        if key == "identity":
            key = "rgb"
        try:
            return cls(key)
        except ValueError:
            choices = ", ".join(p.label for p in cls)
            raise ValueError(f"unknown channel permutation {name!r} (choose from {choices})") from None

    def inverse(self) -> ChannelPermutation:
        inv = [""] * 3
        for out_slot, src in enumerate(self.sources):
            inv[src] = "rgb"[out_slot]
        return ChannelPermutation("".join(inv))

    def apply(self, planes):
        planes = tuple(planes)
        return tuple(planes[src] for src in self.sources)

    def __str__(self):
        return self.label


def encrypt_region(triple: ChannelTriple, cp=ChannelPermutation.IDENTITY) -> ChannelTriple:
    cp = ChannelPermutation.from_name(cp)
    scrambled = [scramble_plane(p) for p in triple.planes()]
    return ChannelTriple(*cp.apply(scrambled))


def decrypt_region(triple: ChannelTriple, cp=ChannelPermutation.IDENTITY) -> ChannelTriple:
    cp = ChannelPermutation.from_name(cp)
    restored = cp.inverse().apply(triple.planes())
    return ChannelTriple(*(unscramble_plane(p) for p in restored))


def encrypt_image(image: RasterImage, region: Region, cp=ChannelPermutation.IDENTITY) -> RasterImage:
    return insert_region(image, region, encrypt_region(extract_region(image, region), cp))


def decrypt_image(image: RasterImage, region: Region, cp=ChannelPermutation.IDENTITY) -> RasterImage:
    return insert_region(image, region, decrypt_region(extract_region(image, region), cp))


@dataclass(frozen=True)
class CipherMetadata:
    """Parameters needed to undo an encryption, stored in a sidecar file."""

    region: Region
    channel_perm: ChannelPermutation = ChannelPermutation.IDENTITY
    version: int = FORMAT_VERSION

    def __post_init__(self):
        object.__setattr__(self, "channel_perm", ChannelPermutation.from_name(self.channel_perm))


_KEYS = ("version", "region_rows", "region_cols", "channel_perm", "algorithm")


def write_metadata(meta: CipherMetadata) -> str:
    r = meta.region
    lines = [
        f"version={meta.version}",
        f"region_rows={r.row_start}..{r.row_end}",
        f"region_cols={r.col_start}..{r.col_end}",
        f"channel_perm={meta.channel_perm.label}",
        f"algorithm={ALGORITHM}",
    ]
    return "\n".join(lines) + "\n"


def _parse_range(value: str, lineno: int) -> tuple[int, int]:
    lo, sep, hi = value.partition("..")
    if not sep or not lo.isdigit() or not hi.isdigit():
        raise MetadataError(f"bad range {value!r}, expected START..END", lineno)
    return int(lo), int(hi)


def read_metadata(text: str) -> CipherMetadata:
    """Parse sidecar text; the five keys must appear exactly once, in order."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    values = {}
    for lineno, line in enumerate(lines, start=1):
        if line.endswith("\r"):
            raise MetadataError("CR line endings are not allowed", lineno)
        key, sep, value = line.partition("=")
        if not sep:
            raise MetadataError(f"expected key=value, got {line!r}", lineno)
        if key not in _KEYS:
            raise MetadataError(f"unknown key {key!r}", lineno)
        if key in values:
            raise MetadataError(f"duplicate key {key!r}", lineno)
        expected = _KEYS[len(values)]
        if key != expected:
            raise MetadataError(f"expected key {expected!r}, got {key!r}", lineno)
        values[key] = (value, lineno)
    if len(values) < len(_KEYS):
        missing = _KEYS[len(values)]
        raise MetadataError(f"missing key {missing!r}", len(lines) + 1)

    version, lineno = values["version"]
    if version != str(FORMAT_VERSION):
        raise MetadataError(f"unsupported version {version!r}", lineno)
    algorithm, lineno = values["algorithm"]
    if algorithm != ALGORITHM:
        raise MetadataError(f"unsupported algorithm {algorithm!r}", lineno)
    name, lineno = values["channel_perm"]
    try:
        cp = ChannelPermutation.from_name(name)
    except ValueError as exc:
        raise MetadataError(str(exc), lineno) from None
    rows = _parse_range(*values["region_rows"])
    cols = _parse_range(*values["region_cols"])
    try:
        region = Region(rows[0], rows[1], cols[0], cols[1])
    except (ValueError, IndexError) as exc:
        key = "region_cols" if getattr(exc, "axis", None) == "cols" else "region_rows"
        raise MetadataError(str(exc), values[key][1]) from None
    return CipherMetadata(region, cp, int(version))

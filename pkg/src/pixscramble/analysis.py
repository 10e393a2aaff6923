"""Statistics comparing a plain region with its scrambled counterpart.

The report carries what is needed to redraw per-channel intensity graphs
(row and column mean traces, 256-bin histograms) and to check, as plain
integers, that scrambling only moved values around.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .cipher import ChannelPermutation
from .errors import ShapeError, UndefinedCorrelationError
from .raster import ChannelPlane, ChannelTriple

CHANNELS = ("r", "g", "b")
TRACE_DECIMALS = 6
CSV_HEADER = ("metric", "channel", "index", "value")


def histogram(plane: ChannelPlane) -> tuple[int, ...]:
    """Counts of each value 0..255."""
    counts = np.bincount(plane.values.ravel(), minlength=256)
    return tuple(int(c) for c in counts)


def channel_sums(triple: ChannelTriple) -> tuple[int, int, int, int]:
    """``(sum_r, sum_g, sum_b, total)`` as exact integers."""
    sums = [int(p.values.sum(dtype=np.int64)) for p in triple.planes()]
    return (*sums, sum(sums))


def correlation(a: ChannelPlane, b: ChannelPlane) -> float:
    """Pearson correlation of two same-shape planes over flattened value pairs."""
    if a.shape != b.shape:
        raise ShapeError(f"cannot correlate planes of shape {a.shape} and {b.shape}")
    x = a.values.ravel().astype(np.float64)
    y = b.values.ravel().astype(np.float64)
    dx = x - x.mean()
    dy = y - y.mean()
    sxx = float(dx @ dx)
    syy = float(dy @ dy)
    if sxx == 0.0 or syy == 0.0:
        raise UndefinedCorrelationError("undefined correlation: a plane has zero variance")
    r = float(dx @ dy) / math.sqrt(sxx * syy)
    return min(1.0, max(-1.0, r))


def _mean(total: int, count: int) -> float:
    return float(round(Fraction(total, count), TRACE_DECIMALS))


@dataclass(frozen=True)
class ChannelProfile:
    """Column-mean and row-mean traces of one plane, rounded to 6 decimals."""

    col_means: tuple[float, ...]
    row_means: tuple[float, ...]


def plane_profile(plane: ChannelPlane) -> ChannelProfile:
    v = plane.values.astype(np.int64)
    m, n = plane.shape
    return ChannelProfile(
        col_means=tuple(_mean(int(s), m) for s in v.sum(axis=0)),
        row_means=tuple(_mean(int(s), n) for s in v.sum(axis=1)),
    )


def rgb_profile(triple: ChannelTriple) -> dict[str, ChannelProfile]:
    return {ch: plane_profile(p) for ch, p in zip(CHANNELS, triple.planes())}


@dataclass(frozen=True)
class SideStats:
    """Everything the report holds about one of the two compared regions."""

    histograms: dict[str, tuple[int, ...]]
    sums: dict[str, int]
    total: int
    profiles: dict[str, ChannelProfile]

    @classmethod
    def of(cls, triple: ChannelTriple) -> SideStats:
        sr, sg, sb, total = channel_sums(triple)
        return cls(
            histograms={ch: histogram(p) for ch, p in zip(CHANNELS, triple.planes())},
            sums=dict(zip(CHANNELS, (sr, sg, sb))),
            total=total,
            profiles=rgb_profile(triple),
        )


@dataclass(frozen=True)
class AnalysisReport:
    plain: SideStats
    cipher: SideStats
    # None where a channel is constant on either side
    correlations: dict[str, float | None] = field(default_factory=dict)

    @property
    def totals_match(self) -> bool:
        return self.plain.total == self.cipher.total

    def histograms_match(self, cp=ChannelPermutation.IDENTITY) -> bool:
        """True if each cipher channel histogram equals the plain histogram ``cp`` routed to it."""
        cp = ChannelPermutation.from_name(cp)
        return all(
            self.cipher.histograms[out] == self.plain.histograms[CHANNELS[src]]
            for out, src in zip(CHANNELS, cp.sources)
        )

    def consistent_channel_perms(self) -> list[ChannelPermutation]:
        """Channel permutations whose histogram routing agrees with the data."""
        return [cp for cp in ChannelPermutation if self.histograms_match(cp)]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for side_name, side in (("plain", self.plain), ("cipher", self.cipher)):
            for ch in CHANNELS:
                for v, count in enumerate(side.histograms[ch]):
                    writer.writerow((f"{side_name}_hist", ch, v, count))
            for ch in CHANNELS:
                prof = side.profiles[ch]
                for j, mean in enumerate(prof.col_means):
                    writer.writerow((f"{side_name}_col_mean", ch, j, f"{mean:.{TRACE_DECIMALS}f}"))
                for i, mean in enumerate(prof.row_means):
                    writer.writerow((f"{side_name}_row_mean", ch, i, f"{mean:.{TRACE_DECIMALS}f}"))
        for side_name, side in (("plain", self.plain), ("cipher", self.cipher)):
            for ch in CHANNELS:
                writer.writerow(("summary", f"{side_name}_sum_{ch}", "", side.sums[ch]))
            writer.writerow(("summary", f"{side_name}_total", "", side.total))
        for ch in CHANNELS:
            r = self.correlations.get(ch)
            writer.writerow(("summary", f"corr_{ch}", "", "undefined" if r is None else repr(r)))
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> AnalysisReport:
        rows = csv.reader(io.StringIO(text))
        header = next(rows, None)
        if tuple(header or ()) != CSV_HEADER:
            raise ValueError(f"bad CSV header {header!r}")
        hist = {s: {ch: {} for ch in CHANNELS} for s in ("plain", "cipher")}
        traces = {
            (s, kind): {ch: {} for ch in CHANNELS}
            for s in ("plain", "cipher")
            for kind in ("col_mean", "row_mean")
        }
        summary = {}
        for lineno, row in enumerate(rows, start=2):
            if len(row) != 4:
                raise ValueError(f"line {lineno}: expected 4 fields, got {len(row)}")
            metric, channel, index, value = row
            if metric == "summary":
                summary[channel] = value
                continue
            side, _, kind = metric.partition("_")
            if side not in hist or channel not in CHANNELS:
                raise ValueError(f"line {lineno}: unknown metric {metric!r}/{channel!r}")
            if kind == "hist":
                hist[side][channel][int(index)] = int(value)
            elif (side, kind) in traces:
                traces[side, kind][channel][int(index)] = float(value)
            else:
                raise ValueError(f"line {lineno}: unknown metric {metric!r}")

        def ordered(d):
            return tuple(d[k] for k in range(len(d)))

        def side(s):
            histograms = {ch: ordered(hist[s][ch]) for ch in CHANNELS}
            if any(len(h) != 256 for h in histograms.values()):
                raise ValueError(f"{s} histograms must have 256 bins")
            return SideStats(
                histograms=histograms,
                sums={ch: int(summary[f"{s}_sum_{ch}"]) for ch in CHANNELS},
                total=int(summary[f"{s}_total"]),
                profiles={
                    ch: ChannelProfile(
                        col_means=ordered(traces[s, "col_mean"][ch]),
                        row_means=ordered(traces[s, "row_mean"][ch]),
                    )
                    for ch in CHANNELS
                },
            )

        correlations = {}
        for ch in CHANNELS:
            raw = summary[f"corr_{ch}"]
            correlations[ch] = None if raw == "undefined" else float(raw)
        return cls(side("plain"), side("cipher"), correlations)


def compare_report(plain: ChannelTriple, cipher: ChannelTriple) -> AnalysisReport:
    if plain.shape != cipher.shape:
        raise ShapeError(f"plain region {plain.shape} and cipher region {cipher.shape} differ")
    correlations = {}
    for ch, a, b in zip(CHANNELS, plain.planes(), cipher.planes()):
        try:
            correlations[ch] = correlation(a, b)
        except UndefinedCorrelationError:
            correlations[ch] = None
    return AnalysisReport(SideStats.of(plain), SideStats.of(cipher), correlations)

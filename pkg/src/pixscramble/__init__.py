"""Reversible transpose-reshape pixel scrambling of rectangular image regions."""
from .analysis import (
    AnalysisReport,
    channel_sums,
    compare_report,
    correlation,
    histogram,
    rgb_profile,
)
from .cipher import (
    ChannelPermutation,
    CipherMetadata,
    decrypt_image,
    decrypt_region,
    encrypt_image,
    encrypt_region,
    read_metadata,
    write_metadata,
)
from .errors import (
    MetadataError,
    PixScrambleError,
    RegionBoundsError,
    ShapeError,
    UndefinedCorrelationError,
)
from .estimator import RegionScrambler
from .permute import (
    PositionPermutation,
    reshape_column_major,
    scramble_permutation,
    scramble_plane,
    transpose,
    unscramble_plane,
)
from .ppm import read_ppm, write_ppm
from .raster import ChannelPlane, ChannelTriple, RasterImage, Region, extract_region, insert_region

__version__ = "0.1.0"

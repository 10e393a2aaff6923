"""scikit-learn compatible wrapper around the region cipher.

``RegionScrambler`` is a stateless transformer: ``fit`` only validates the
parameters against the image shape it is given, ``transform`` encrypts and
``inverse_transform`` decrypts. It accepts one ``(height, width, 3)`` image
or a batch ``(n_images, height, width, 3)`` of equally sized images.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .cipher import ChannelPermutation, decrypt_image, encrypt_image
from .errors import ShapeError
from .raster import RasterImage, Region


def check_image_array(X, *, allow_batch=True) -> np.ndarray:
    """Validate an image or batch of images and return it as a 4-D uint8 array.

    Raises
    ------
    ShapeError
        If ``X`` is not ``(h, w, 3)`` or, with ``allow_batch``, ``(k, h, w, 3)``.
    ValueError
        If any value is outside [0, 255] or not integral.
    """
    if isinstance(X, RasterImage):
        X = X.pixels
    arr = np.asarray(X)
    if arr.ndim == 3:
        arr = arr[np.newaxis]
    elif arr.ndim != 4 or not allow_batch:
        raise ShapeError(f"expected an (h, w, 3) image or (k, h, w, 3) batch, got shape {arr.shape}")
    if arr.shape[-1] != 3:
        raise ShapeError(f"expected 3 colour channels, got {arr.shape[-1]}")
    if 0 in arr.shape:
        raise ShapeError(f"empty image batch, shape {arr.shape}")
    if arr.dtype.kind not in "biuf":
        raise ValueError(f"image values must be integers in [0, 255], got dtype {arr.dtype}")
    if arr.dtype != np.uint8:
        if arr.min() < 0 or arr.max() > 255:
            raise ValueError("image values must lie in [0, 255]")
        if arr.dtype.kind == "f" and not np.all(np.mod(arr, 1) == 0):
            raise ValueError("image values must be integers in [0, 255]")
    return arr.astype(np.uint8, copy=False)


def check_region(region, height: int, width: int) -> Region:
    """Coerce ``None``, a ``Region``, an ``R0:R1,C0:C1`` string or a 4-tuple to a fitted ``Region``."""
    if region is None:
        resolved = Region(0, height, 0, width)
    elif isinstance(region, Region):
        resolved = region
    elif isinstance(region, str):
        resolved = Region.parse(region)
    else:
        resolved = Region(*region)
    resolved.check_fits(height, width)
    return resolved


class RegionScrambler(TransformerMixin, BaseEstimator):
    """Transpose-reshape scramble of a fixed image region.

    Parameters
    ----------
    region : Region, str, tuple of 4 ints or None, default=None
        Rows then columns, 0-based half-open. ``None`` scrambles the whole image.
    channel_perm : str or ChannelPermutation, default="identity"
        Channel interchange applied after the position scramble.

    Attributes
    ----------
    region_ : Region
    channel_perm_ : ChannelPermutation
    image_shape_ : tuple of int
        ``(height, width)`` of the images seen in ``fit``.
    """

    def __init__(self, region=None, channel_perm="identity"):
        self.region = region
        self.channel_perm = channel_perm

    def fit(self, X, y=None):
        arr = check_image_array(X)
        self.image_shape_ = arr.shape[1:3]
        self.region_ = check_region(self.region, *self.image_shape_)
        self.channel_perm_ = ChannelPermutation.from_name(self.channel_perm)
        return self

    def _apply(self, X, func):
        check_is_fitted(self, ["region_", "channel_perm_"])
        single = np.asarray(X.pixels if isinstance(X, RasterImage) else X).ndim == 3
        arr = check_image_array(X)
        if arr.shape[1:3] != self.image_shape_:
            raise ShapeError(
                f"images are {arr.shape[1:3]}, but the scrambler was fitted on {self.image_shape_}"
            )
        out = np.stack([func(RasterImage(img), self.region_, self.channel_perm_).pixels for img in arr])
        return out[0] if single else out

    def transform(self, X):
        return self._apply(X, encrypt_image)

    def inverse_transform(self, X):
        return self._apply(X, decrypt_image)

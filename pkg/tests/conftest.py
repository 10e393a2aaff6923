import numpy as np
import pytest

from pixscramble import RasterImage


@pytest.fixture
def rng():
    return np.random.default_rng(20131018)


@pytest.fixture
def paper_image():
    """Deterministic non-constant 158x212 test image (height x width)."""
    rows, cols = np.mgrid[0:158, 0:212]
    pixels = np.stack(
        [(rows * 3 + cols) % 256, (rows * 7 + cols * 5 + 11) % 256, (rows * cols + 29) % 256],
        axis=-1,
    )
    return RasterImage(pixels)

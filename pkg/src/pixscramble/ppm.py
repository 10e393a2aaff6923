"""Binary PPM (P6) reader and writer, 8-bit only.

Writing always produces the canonical header ``P6\\n<w> <h>\\n255\\n`` so equal
images give equal bytes.
"""
from __future__ import annotations

import numpy as np

from .errors import PixScrambleError
from .raster import RasterImage

MAGIC = b"P6"
MAX_TOKEN_LEN = 10
_WHITESPACE = b" \t\n\r\x0b\x0c"


class PpmError(PixScrambleError, ValueError):
    """Base for PPM parse failures; ``offset`` is the byte position of the fault."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class BadMagicError(PpmError):
    pass


class UnsupportedMaxvalError(PpmError):
    pass


class TruncatedPayloadError(PpmError):
    pass


class HeaderTokenError(PpmError):
    """Header field missing, non-numeric, zero or too long."""


class TrailingDataError(PpmError):
    pass


def _next_token(data: bytes, pos: int) -> tuple[bytes, int, int]:
    """Return ``(token, token_start, pos_after_token)``, skipping whitespace and comments."""
    size = len(data)
    while pos < size:
        c = data[pos:pos + 1]
        if c in _WHITESPACE and c:
            pos += 1
        elif c == b"#":
            while pos < size and data[pos:pos + 1] not in (b"\n", b"\r"):
                pos += 1
        else:
            break
    start = pos
    while pos < size and data[pos:pos + 1] not in _WHITESPACE and data[pos:pos + 1] != b"#":
        pos += 1
        if pos - start > MAX_TOKEN_LEN:
            raise HeaderTokenError(f"header token longer than {MAX_TOKEN_LEN} bytes", start)
    return data[start:pos], start, pos


def _header_int(data: bytes, pos: int, name: str) -> tuple[int, int, int]:
    token, start, pos = _next_token(data, pos)
    if not token:
        raise HeaderTokenError(f"missing {name} in header", start)
    if not token.isdigit():
        raise HeaderTokenError(f"non-numeric {name} {token!r}", start)
    return int(token), start, pos


def read_ppm(data: bytes) -> RasterImage:
    data = bytes(data)
    if data[:2] != MAGIC:
        raise BadMagicError(f"bad magic {data[:2]!r}, expected b'P6'", 0)
    pos = 2
    if pos < len(data) and data[pos:pos + 1] not in _WHITESPACE and data[pos:pos + 1] != b"#":
        raise BadMagicError(f"bad magic {data[:3]!r}, expected b'P6'", 0)
    width, start, pos = _header_int(data, pos, "width")
    if width < 1:
        raise HeaderTokenError("width must be positive", start)
    height, start, pos = _header_int(data, pos, "height")
    if height < 1:
        raise HeaderTokenError("height must be positive", start)
    maxval, start, pos = _header_int(data, pos, "maxval")
    if maxval != 255:
        raise UnsupportedMaxvalError(f"unsupported maxval {maxval}, only 255 is accepted", start)
    if pos >= len(data) or data[pos:pos + 1] not in _WHITESPACE:
        raise TruncatedPayloadError("truncated payload: header not terminated", pos)
    pos += 1
    expected = 3 * width * height
    payload = data[pos:pos + expected]
    if len(payload) < expected:
        raise TruncatedPayloadError(
            f"truncated payload: expected {expected} bytes, got {len(payload)}", len(data)
        )
    if len(data) > pos + expected:
        raise TrailingDataError(f"{len(data) - pos - expected} unexpected trailing bytes", pos + expected)
    arr = np.frombuffer(payload, dtype=np.uint8).reshape(height, width, 3)
    return RasterImage(arr)


def write_ppm(image: RasterImage) -> bytes:
    header = b"P6\n%d %d\n255\n" % (image.width, image.height)
    return header + image.pixels.tobytes(order="C")


def load(path) -> RasterImage:
    with open(path, "rb") as fh:
        return read_ppm(fh.read())


def save(image: RasterImage, path) -> None:
    with open(path, "wb") as fh:
        fh.write(write_ppm(image))

"""Netpbm PPM (P6 binary / P3 ASCII) reading and writing.

Only 8-bit images (maxval 255) are handled. The reader is tolerant:
arbitrary whitespace and ``#`` comments are accepted in the header and
anything after the pixel body is ignored. The writer always emits the
canonical header ``P6\\n<w> <h>\\n255\\n``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from os import PathLike
from typing import Literal, Sequence

import numpy as np

from .errors import (
    ChannelOutOfRange,
    DimensionMismatch,
    MalformedHeader,
    PPMError,
    TruncatedBody,
    UnknownMagic,
    UnsupportedMaxVal,
)

MAX_VALUE = 255
PPMFormat = Literal["P6", "P3"]

_WS = b" \t\n\r\v\f"
_TOKEN = re.compile(rb"[ \t\n\r\v\f]*(?:#[^\n\r]*[\n\r][ \t\n\r\v\f]*)*([^ \t\n\r\v\f#]+)")


@dataclass(frozen=True, eq=False)
class RasterImage:
    """A decoded 8-bit raster.

    ``pixels`` has shape ``(height, width, channels)`` and dtype uint8, so
    ``pixels.ravel()`` is the row-major, channel-interleaved sample order
    of the file body.
    """

    pixels: np.ndarray
    max_value: int = MAX_VALUE

    def __post_init__(self):
        px = np.asarray(self.pixels)
        if px.ndim == 2:
            px = px[:, :, None]
        if px.ndim != 3:
            raise ValueError(f"pixels must be 2-D or 3-D, got shape {px.shape}")
        if self.max_value != MAX_VALUE:
            raise UnsupportedMaxVal(f"max_value must be 255, got {self.max_value}")
        if px.size and (px.min() < 0 or px.max() > MAX_VALUE):
            raise ValueError("samples must lie in [0, 255]")
        px = np.ascontiguousarray(px, dtype=np.uint8)
        px.setflags(write=False)
        object.__setattr__(self, "pixels", px)

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def channels(self) -> int:
        return self.pixels.shape[2]

    @property
    def shape(self) -> tuple[int, int, int]:
        return self.pixels.shape

    @property
    def samples(self) -> np.ndarray:
        return self.pixels.ravel()

    @classmethod
    def from_samples(cls, width: int, height: int, channels: int, samples: Sequence[int]) -> "RasterImage":
        arr = np.asarray(samples, dtype=np.int64)
        if arr.size != width * height * channels:
            raise DimensionMismatch(
                f"expected {width * height * channels} samples, got {arr.size}"
            )
        return cls(arr.reshape(height, width, channels))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RasterImage):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.pixels, other.pixels))

    def __hash__(self) -> int:
        return hash((self.shape, self.pixels.tobytes()))

    def __repr__(self) -> str:
        return f"RasterImage(width={self.width}, height={self.height}, channels={self.channels})"


def _next_token(data: bytes, pos: int) -> tuple[bytes, int]:
    m = _TOKEN.match(data, pos)
    if m is None:
        raise MalformedHeader("unexpected end of header")
    return m.group(1), m.end()


def _header_int(data: bytes, pos: int, what: str) -> tuple[int, int]:
    tok, pos = _next_token(data, pos)
    if not tok.isdigit():
        raise MalformedHeader(f"non-numeric {what}: {tok[:20]!r}")
    return int(tok), pos


def parse_ppm(data: bytes) -> RasterImage:
    """Decode a P6 or P3 byte string."""
    magic = data[:2]
    if magic not in (b"P6", b"P3"):
        raise UnknownMagic(f"unsupported magic {magic!r}")
    pos = 2
    width, pos = _header_int(data, pos, "width")
    height, pos = _header_int(data, pos, "height")
    maxval, pos = _header_int(data, pos, "maxval")
    if maxval != MAX_VALUE:
        raise UnsupportedMaxVal(f"only maxval 255 is supported, got {maxval}")
    n = width * height * 3

    if magic == b"P6":
        # exactly one whitespace byte separates maxval from the raster
        if pos >= len(data) or data[pos] not in _WS:
            if n:
                raise TruncatedBody("missing raster after header")
        body = data[pos + 1 : pos + 1 + n]
        if len(body) < n:
            raise TruncatedBody(f"expected {n} raster bytes, got {len(body)}")
        samples = np.frombuffer(body, dtype=np.uint8)
    else:
        values = []
        for _ in range(n):
            try:
                tok, pos = _next_token(data, pos)
            except MalformedHeader:
                raise TruncatedBody(f"expected {n} samples, got {len(values)}") from None
            if not tok.isdigit():
                raise PPMError(f"non-numeric sample {tok[:20]!r}")
            values.append(int(tok))
        samples = np.array(values, dtype=np.int64)
        if samples.size and samples.max() > MAX_VALUE:
            raise PPMError("sample exceeds maxval 255")

    return RasterImage(samples.reshape(height, width, 3))


def write_ppm(img: RasterImage, format: PPMFormat = "P6") -> bytes:
    """Encode ``img`` (3 channels) as canonical P6 or P3 bytes."""
    if img.channels != 3:
        raise DimensionMismatch(f"PPM needs 3 channels, image has {img.channels}")
    header = f"{format}\n{img.width} {img.height}\n{MAX_VALUE}\n".encode("ascii")
    if format == "P6":
        return header + img.pixels.tobytes()
    if format == "P3":
        rows = img.pixels.reshape(-1, 3)
        lines = "".join(f"{r} {g} {b}\n" for r, g, b in rows.tolist())
        return header + lines.encode("ascii")
    raise ValueError(f"unknown PPM format {format!r}")


def read_ppm(path: str | PathLike) -> RasterImage:
    with open(path, "rb") as fh:
        return parse_ppm(fh.read())


def save_ppm(path: str | PathLike, img: RasterImage, format: PPMFormat = "P6") -> None:
    with open(path, "wb") as fh:
        fh.write(write_ppm(img, format))


def channel_plane(img: RasterImage, c: int) -> np.ndarray:
    """Return a de-interleaved copy of channel ``c`` as a (height, width) int64 matrix."""
    if not 0 <= c < img.channels:
        raise ChannelOutOfRange(f"channel {c} not in [0, {img.channels})")
    return img.pixels[:, :, c].astype(np.int64)


def interleave_planes(planes: Sequence[np.ndarray]) -> RasterImage:
    """Inverse of :func:`channel_plane` over all channels."""
    if not planes:
        raise ValueError("need at least one plane")
    shapes = {np.shape(p) for p in planes}
    if len(shapes) != 1:
        raise DimensionMismatch(f"planes have differing shapes: {sorted(shapes)}")
    return RasterImage(np.stack([np.asarray(p) for p in planes], axis=-1))

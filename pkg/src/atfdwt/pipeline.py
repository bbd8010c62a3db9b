"""Whole-image embed / extract built from the transform, stego and fidelity pieces."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .dwt import SubbandPlane, forward_haar, inverse_haar
from .errors import DimensionMismatch, OddDimensions
from .ppm import RasterImage, channel_plane
from .stego import EmbedReport, StegoKey, embed_payload, extract_payload

SECRET_SCALE = 4


def decompose(img: RasterImage) -> list[SubbandPlane]:
    return [forward_haar(channel_plane(img, c)) for c in range(img.channels)]


def synthesize(subbands: list[SubbandPlane]) -> RasterImage:
    """Inverse transform every channel and clamp to [0, 255]."""
    planes = [np.clip(inverse_haar(sb), 0, 255) for sb in subbands]
    return RasterImage(np.stack(planes, axis=-1))


def secret_shape(cover_shape: tuple[int, int, int]) -> tuple[int, int, int]:
    """(height, width, channels) of the secret a cover of this shape carries."""
    h, w, c = cover_shape
    if h % 2 or w % 2:
        raise OddDimensions(f"cover dimensions must be even, got {w}x{h}")
    if h < 4 or w < 4 or h % SECRET_SCALE or w % SECRET_SCALE:
        raise DimensionMismatch(f"cover dimensions must be multiples of 4, got {w}x{h}")
    return h // SECRET_SCALE, w // SECRET_SCALE, c


def image_to_payload(secret: RasterImage) -> bytes:
    """Serialize the secret plane by plane, so channel c feeds cover channel c."""
    return np.transpose(secret.pixels, (2, 0, 1)).tobytes()


def payload_to_image(payload: bytes, shape: tuple[int, int, int]) -> RasterImage:
    h, w, c = shape
    planes = np.frombuffer(payload, dtype=np.uint8).reshape(c, h, w)
    return RasterImage(np.transpose(planes, (1, 2, 0)))


def embed_image(
    cover: RasterImage, secret: RasterImage, key: StegoKey, adjust: bool = True
) -> tuple[RasterImage, EmbedReport]:
    expected = secret_shape(cover.shape)
    if secret.shape != expected:
        raise DimensionMismatch(
            f"secret must be {expected[1]}x{expected[0]}x{expected[2]} for a "
            f"{cover.width}x{cover.height} cover, got {secret.width}x{secret.height}x{secret.channels}"
        )
    subbands, report = embed_payload(decompose(cover), image_to_payload(secret), key, adjust=adjust)
    return synthesize(subbands), report


def extract_image(stego: RasterImage, key: StegoKey) -> RasterImage:
    shape = secret_shape(stego.shape)
    n = shape[0] * shape[1] * shape[2]
    return payload_to_image(extract_payload(decompose(stego), key, n), shape)


@dataclass(frozen=True)
class VerifyResult:
    matched: int
    total: int
    clamped_blocks: int
    stego: Optional[RasterImage] = field(default=None, compare=False, repr=False)

    @property
    def ok(self) -> bool:
        return self.matched == self.total


def verify_roundtrip(cover: RasterImage, secret: RasterImage, key: StegoKey) -> VerifyResult:
    """Embed, then extract from the clamped stego image, and count matching bytes."""
    stego, report = embed_image(cover, secret, key)
    recovered = extract_image(stego, key)
    matched = int(np.count_nonzero(recovered.pixels == secret.pixels))
    return VerifyResult(matched, secret.pixels.size, len(report.clamped_blocks), stego)

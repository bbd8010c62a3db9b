"""Distortion measures between a cover and its stego image."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .errors import DimensionMismatch, EmptyImage, ZeroSignal
from .ppm import RasterImage

PEAK = 255.0


def _samples(img) -> np.ndarray:
    if isinstance(img, RasterImage):
        return img.pixels.astype(np.float64)
    return np.asarray(img, dtype=np.float64)


def _pair(a, b) -> tuple[np.ndarray, np.ndarray]:
    x, y = _samples(a), _samples(b)
    if x.shape != y.shape:
        raise DimensionMismatch(f"images differ in shape: {x.shape} vs {y.shape}")
    return x, y


def mse(a, b) -> float:
    """Mean of squared sample differences over every sample of every channel."""
    x, y = _pair(a, b)
    if x.size == 0:
        raise EmptyImage("cannot compare empty images")
    return float(np.mean((x - y) ** 2))


def psnr_from_mse(err: float) -> float:
    if err == 0:
        return math.inf
    return 10.0 * math.log10(PEAK**2 / err)


def psnr(a, b) -> float:
    """Peak signal-to-noise ratio in dB; ``math.inf`` for identical images."""
    return psnr_from_mse(mse(a, b))


def std_dev(img) -> float:
    """Population standard deviation of all samples, channels pooled."""
    x = _samples(img)
    if x.size == 0:
        raise EmptyImage("standard deviation of an empty image")
    return float(np.std(x))


def image_fidelity(orig, stego) -> float:
    x, y = _pair(orig, stego)
    residual = float(np.sum((x - y) ** 2))
    energy = float(np.sum(x**2))
    if energy == 0:
        if residual == 0:
            return 1.0
        raise ZeroSignal("original image has zero energy")
    return 1.0 - residual / energy


def format_value(v: float) -> str:
    return "inf" if math.isinf(v) else f"{v:.6f}"


@dataclass(frozen=True)
class MetricsReport:
    mse: float
    psnr_db: float
    sd_original: float
    sd_stego: float
    image_fidelity: float

    @classmethod
    def compare(cls, original, stego) -> "MetricsReport":
        return cls(
            mse=mse(original, stego),
            psnr_db=psnr(original, stego),
            sd_original=std_dev(original),
            sd_stego=std_dev(stego),
            image_fidelity=image_fidelity(original, stego),
        )

    def to_text(self) -> str:
        return "".join(f"{k}: {format_value(v)}\n" for k, v in asdict(self).items())

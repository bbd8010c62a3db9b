"""One-level integer Haar decomposition in 2x2 block form.

For a block ``a b / c d`` the forward transform is::

    lr = floor(((a + b) + (c + d)) / 4)
    ho = floor(((a - b) + (c - d)) / 4)
    vo = floor(((a + b) - (c + d)) / 4)
    do = floor(((a - b) - (c - d)) / 4)

and the inverse needs only additions::

    a = (lr + ho) + (vo + do)      b = (lr - ho) + (vo - do)
    c = (lr + ho) - (vo + do)      d = (lr - ho) - (vo - do)

Rounding is floor toward negative infinity. The inverse never clamps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, TextIO

import numpy as np

from .errors import DimensionMismatch, OddDimensions

# forward scaling / wavelet coefficients (h0, h1, g0, g1)
FORWARD_COEFFS = (0.5, 0.5, 0.5, -0.5)
# inverse coefficients
INVERSE_COEFFS = (1, 1, 1, -1)

SUBBAND_NAMES = ("lr", "ho", "vo", "do")


@dataclass(frozen=True, eq=False)
class SubbandPlane:
    """The four half-resolution subbands of one channel.

    ``lr`` is the low-resolution approximation; ``ho``, ``vo`` and ``do``
    are the horizontal, vertical and diagonal orientation details.
    """

    lr: np.ndarray
    ho: np.ndarray
    vo: np.ndarray
    do: np.ndarray

    def __post_init__(self):
        arrays = [np.array(getattr(self, n), dtype=np.int64) for n in SUBBAND_NAMES]
        shapes = {a.shape for a in arrays}
        if len(shapes) != 1 or arrays[0].ndim != 2:
            raise DimensionMismatch(f"subbands must share one 2-D shape, got {sorted(shapes)}")
        for name, arr in zip(SUBBAND_NAMES, arrays):
            object.__setattr__(self, name, arr)

    @property
    def shape(self) -> tuple[int, int]:
        return self.lr.shape

    def __iter__(self) -> Iterator[np.ndarray]:
        return iter((self.lr, self.ho, self.vo, self.do))

    def replace(self, **bands) -> "SubbandPlane":
        fields = {n: getattr(self, n) for n in SUBBAND_NAMES}
        fields.update(bands)
        return SubbandPlane(**fields)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubbandPlane):
            return NotImplemented
        return all(np.array_equal(x, y) for x, y in zip(self, other))

    def __repr__(self) -> str:
        return f"SubbandPlane(shape={self.shape})"


def _check_even(shape: tuple[int, ...]) -> None:
    if len(shape) != 2:
        raise ValueError(f"expected a 2-D plane, got shape {shape}")
    if shape[0] % 2 or shape[1] % 2:
        raise OddDimensions(f"plane dimensions must be even, got {shape[0]}x{shape[1]}")


def forward_haar(plane) -> SubbandPlane:
    """Decompose an (M, N) integer plane, M and N even."""
    x = np.asarray(plane, dtype=np.int64)
    _check_even(x.shape)
    a = x[0::2, 0::2]
    b = x[0::2, 1::2]
    c = x[1::2, 0::2]
    d = x[1::2, 1::2]
    return SubbandPlane(
        lr=((a + b) + (c + d)) // 4,
        ho=((a - b) + (c - d)) // 4,
        vo=((a + b) - (c + d)) // 4,
        do=((a - b) - (c - d)) // 4,
    )


def inverse_haar(sb: SubbandPlane) -> np.ndarray:
    """Rebuild the (M, N) plane from its subbands, unclamped."""
    l, h, v, d = sb
    out = np.empty((2 * l.shape[0], 2 * l.shape[1]), dtype=np.int64)
    out[0::2, 0::2] = (l + h) + (v + d)
    out[0::2, 1::2] = (l - h) + (v - d)
    out[1::2, 0::2] = (l + h) - (v + d)
    out[1::2, 1::2] = (l - h) - (v - d)
    return out


def reconstruct_block(l: int, h: int, v: int, d: int) -> tuple[int, int, int, int]:
    """Single-block inverse: returns (x00, x01, x10, x11)."""
    return ((l + h) + (v + d), (l - h) + (v - d), (l + h) - (v + d), (l - h) - (v - d))


# --- debug dump -------------------------------------------------------------

def write_subband_dump(sb: SubbandPlane, fh: TextIO) -> None:
    """Write four ``SUBBAND <name> <w> <h>`` blocks of signed decimals."""
    h, w = sb.shape
    for name in SUBBAND_NAMES:
        fh.write(f"SUBBAND {name} {w} {h}\n")
        for row in getattr(sb, name).tolist():
            fh.write(" ".join(str(v) for v in row))
            fh.write("\n")


def read_subband_dump(fh: TextIO) -> SubbandPlane:
    lines = [ln for ln in fh.read().splitlines() if ln.strip()]
    bands = {}
    i = 0
    while i < len(lines):
        parts = lines[i].split()
        if len(parts) != 4 or parts[0] != "SUBBAND" or parts[1] not in SUBBAND_NAMES:
            raise ValueError(f"bad subband header: {lines[i]!r}")
        w, h = int(parts[2]), int(parts[3])
        rows = [[int(t) for t in ln.split()] for ln in lines[i + 1 : i + 1 + h]]
        arr = np.array(rows, dtype=np.int64).reshape(h, w)
        bands[parts[1]] = arr
        i += 1 + h
    missing = set(SUBBAND_NAMES) - bands.keys()
    if missing:
        raise ValueError(f"dump is missing subbands {sorted(missing)}")
    return SubbandPlane(**bands)

"""Payload insertion into, and extraction from, vertical-orientation subbands.

Every vo coefficient carries two payload bits in its 8-bit representation.
Two codings exist:

``"twos"`` (default)
    the byte is ``vo mod 256`` (two's complement); the coefficient may
    change sign during adjustment.
``"sign"``
    the byte is ``|vo|`` and the sign of vo is never modified.

The two bit positions for coefficient
``t`` (row-major within its channel) come from the key::

    k  = t mod 8
    p1 = (k mod s) mod 4
    p2 = (p1 + 1) mod 4

so positions never go above bit 3. The first bit of each pair in stream
order goes to ``p1``. Payload bytes are unpacked MSB-first and split into
contiguous, near-equal chunks, one chunk per channel in channel order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .dwt import SubbandPlane
from .errors import DimensionMismatch, OddDimensions, PayloadTooLarge, SamePosition
from .fidelity import adjust_many, as_int8

K_PERIOD = 8
MAX_POSITION = 3
PIXEL_MAX = 255


CODINGS = ("twos", "sign")


@dataclass(frozen=True)
class StegoKey:
    """Embedding key: the hash modulus ``s`` in [2, 7] and the coefficient coding.

    The position counter restarts at 0 for every channel and cycles
    through 0..7 along the row-major coefficient index.
    """

    s: int = 4
    coding: str = "twos"
    k_policy: str = field(default="coefficient index mod 8, reset per channel", compare=False)

    def __post_init__(self):
        if isinstance(self.s, bool) or not isinstance(self.s, (int, np.integer)):
            raise TypeError(f"key s must be an integer, got {type(self.s).__name__}")
        if not 2 <= self.s <= 7:
            raise ValueError(f"key s must be in [2, 7], got {self.s}")
        if self.coding not in CODINGS:
            raise ValueError(f"coding must be one of {CODINGS}, got {self.coding!r}")


@dataclass
class EmbedReport:
    coefficients_written: int = 0
    adjustments_applied: int = 0
    clamped_blocks: list[tuple[int, int, int]] = field(default_factory=list)
    max_abs_pixel_delta: int = 0
    payload_bytes: int = 0

    def to_text(self) -> str:
        triples = ",".join(f"({c} {r} {q})" for c, r, q in self.clamped_blocks)
        return (
            f"payload_bytes: {self.payload_bytes}\n"
            f"coefficients_written: {self.coefficients_written}\n"
            f"adjustments_applied: {self.adjustments_applied}\n"
            f"max_abs_pixel_delta: {self.max_abs_pixel_delta}\n"
            f"clamped_count: {len(self.clamped_blocks)}\n"
            f"clamped_blocks: {triples}\n"
        )

    @classmethod
    def from_text(cls, text: str) -> "EmbedReport":
        kv = {}
        for line in text.splitlines():
            if ":" in line:
                k, v = line.split(":", 1)
                kv[k.strip()] = v.strip()
        blocks = []
        if kv.get("clamped_blocks"):
            for item in kv["clamped_blocks"].split(","):
                c, r, q = item.strip().strip("()").split()
                blocks.append((int(c), int(r), int(q)))
        return cls(
            coefficients_written=int(kv["coefficients_written"]),
            adjustments_applied=int(kv["adjustments_applied"]),
            clamped_blocks=blocks,
            max_abs_pixel_delta=int(kv["max_abs_pixel_delta"]),
            payload_bytes=int(kv["payload_bytes"]),
        )


def capacity_bytes(width: int, height: int, channels: int) -> int:
    """Payload bytes a cover can carry at two bits per vo coefficient."""
    if width % 2 or height % 2:
        raise OddDimensions(f"cover dimensions must be even, got {width}x{height}")
    return (width // 2) * (height // 2) * channels * 2 // 8


def position_pair(k: int, s: int) -> tuple[int, int]:
    p1 = (k % K_PERIOD % s) % 4
    return p1, (p1 + 1) % 4


def _positions(n: int, s: int) -> tuple[np.ndarray, np.ndarray]:
    k = np.arange(n, dtype=np.int64) % K_PERIOD
    p1 = (k % s) % 4
    return p1, (p1 + 1) % 4


def embed_pair(value: int, bit1: int, bit2: int, p1: int, p2: int) -> int:
    if p1 == p2:
        raise SamePosition(f"embedding positions must differ, got ({p1}, {p2})")
    value &= ~((1 << p1) | (1 << p2))
    return value | (bit1 & 1) << p1 | (bit2 & 1) << p2


def extract_pair(value: int, p1: int, p2: int) -> tuple[int, int]:
    if p1 == p2:
        raise SamePosition(f"embedding positions must differ, got ({p1}, {p2})")
    return (value >> p1) & 1, (value >> p2) & 1


def split_sizes(n_bytes: int, channels: int) -> list[int]:
    """Chunk lengths for distributing ``n_bytes`` over ``channels``."""
    base, extra = divmod(n_bytes, channels)
    return [base + (1 if c < extra else 0) for c in range(channels)]


def _check_capacity(subbands: Sequence[SubbandPlane], n_bytes: int) -> None:
    if not subbands:
        raise DimensionMismatch("need at least one channel of subbands")
    shapes = {sb.shape for sb in subbands}
    if len(shapes) != 1:
        raise DimensionMismatch(f"channels have differing subband shapes: {sorted(shapes)}")
    h, w = subbands[0].shape
    cap = capacity_bytes(2 * w, 2 * h, len(subbands))
    if n_bytes > cap:
        raise PayloadTooLarge(f"payload of {n_bytes} bytes exceeds capacity {cap}")


def _coefficient_bytes(vo: np.ndarray, coding: str) -> np.ndarray:
    if coding == "twos":
        if vo.size and (vo.min() < -128 or vo.max() > 127):
            raise ValueError("vo coefficients must lie in [-128, 127]")
        return vo & 0xFF
    mag = np.abs(vo)
    if mag.size and mag.max() > PIXEL_MAX:
        raise ValueError("vo magnitudes must fit in a byte")
    return mag


def _decoder(orig: np.ndarray, coding: str):
    """Map coefficient bytes back to vo values, per coefficient."""
    if coding == "twos":
        return as_int8
    # zero coefficients count as positive
    sign = np.where(orig < 0, -1, 1)
    return lambda b: sign.reshape(sign.shape + (1,) * (np.ndim(b) - 1)) * b


def _block_feasibility(sb: SubbandPlane, decode, n: int):
    """Build the predicate: all four pixels rebuilt with vo = decode(byte) lie in [0, 255]."""
    l = sb.lr.ravel()[:n]
    h = sb.ho.ravel()[:n]
    d = sb.do.ravel()[:n]
    # x00, x01 = offset + vo and x10, x11 = offset - vo, so vo has one allowed interval
    up = np.minimum(l + h + d, l - h - d)
    down = np.maximum(l + h - d, l - h + d)
    lo = np.maximum(-up, down - PIXEL_MAX)[:, None]
    hi = np.minimum(PIXEL_MAX - np.maximum(l + h + d, l - h - d), np.minimum(l + h - d, l - h + d))[:, None]

    def feasible(cand: np.ndarray) -> np.ndarray:
        v = decode(cand)
        return (v >= lo) & (v <= hi)

    return feasible


def embed_payload(
    subbands: Sequence[SubbandPlane],
    payload: bytes,
    key: StegoKey,
    adjust: bool = True,
) -> tuple[list[SubbandPlane], EmbedReport]:
    """Write ``payload`` into the vo subbands of ``subbands``.

    With ``adjust`` on, each written coefficient is moved to the closest
    value that keeps the two payload bits and keeps the rebuilt 2x2 block
    inside [0, 255]. Blocks where no such byte exists are listed in
    ``report.clamped_blocks`` (they are also listed with ``adjust`` off
    when the plain embedded value leaves the range).
    """
    payload = bytes(payload)
    _check_capacity(subbands, len(payload))
    report = EmbedReport(payload_bytes=len(payload))
    out = list(subbands)
    start = 0
    for c, (sb, size) in enumerate(zip(subbands, split_sizes(len(payload), len(subbands)))):
        chunk = payload[start : start + size]
        start += size
        if not chunk:
            continue
        bits = np.unpackbits(np.frombuffer(chunk, dtype=np.uint8)).astype(np.int64)
        b1, b2 = bits[0::2], bits[1::2]
        n = b1.size

        vo = sb.vo.ravel()
        orig = vo[:n]
        byte = _coefficient_bytes(orig, key.coding)
        decode = _decoder(orig, key.coding)
        p1, p2 = _positions(n, key.s)
        embedded = byte & ~((1 << p1) | (1 << p2)) | (b1 << p1) | (b2 << p2)

        feasible = _block_feasibility(sb, decode, n)
        if adjust:
            new_byte, ok = adjust_many(
                byte, embedded, p1, p2, feasible, signed=key.coding == "twos"
            )
        else:
            new_byte = embedded
            ok = feasible(embedded[:, None])[:, 0]

        new_vo = vo.copy()
        new_vo[:n] = decode(new_byte)
        out[c] = sb.replace(vo=new_vo.reshape(sb.shape))

        report.coefficients_written += n
        report.adjustments_applied += int(np.count_nonzero(new_byte != embedded))
        # every pixel of the block moves by exactly the vo change
        report.max_abs_pixel_delta = max(
            report.max_abs_pixel_delta, int(np.abs(new_vo[:n] - orig).max())
        )
        w = sb.shape[1]
        report.clamped_blocks.extend((c, int(t) // w, int(t) % w) for t in np.flatnonzero(~ok))
    return out, report


def extract_payload(subbands: Sequence[SubbandPlane], key: StegoKey, n_bytes: int) -> bytes:
    """Read ``n_bytes`` back out, mirroring :func:`embed_payload`."""
    _check_capacity(subbands, n_bytes)
    parts = []
    for sb, size in zip(subbands, split_sizes(n_bytes, len(subbands))):
        if not size:
            continue
        n = size * 4
        vo = sb.vo.ravel()[:n]
        byte = vo & 0xFF if key.coding == "twos" else np.abs(vo)
        p1, p2 = _positions(n, key.s)
        bits = np.empty(2 * n, dtype=np.uint8)
        bits[0::2] = (byte >> p1) & 1
        bits[1::2] = (byte >> p2) & 1
        parts.append(np.packbits(bits).tobytes())
    return b"".join(parts)

"""Fidelity adjustment of an embedded coefficient byte.

After two payload bits are written into a byte, the other six bits are
free. :func:`adjust` picks, among the 64 bytes that keep the payload
bits, the one closest to the original value that the caller also deems
feasible. Ties go to the smaller value.

With ``signed=True`` bytes are read as 8-bit two's complement, so that
distances (and the tie-break) are measured on the coefficient values
-128..127 rather than on 0..255.
"""

from __future__ import annotations

from typing import Callable, NamedTuple, Optional

import numpy as np

from .errors import SamePosition

Feasible = Callable[[int], bool]


class Adjustment(NamedTuple):
    value: int
    feasible: bool


def _check_positions(p1: int, p2: int) -> None:
    if p1 == p2:
        raise SamePosition(f"embedding positions must differ, got ({p1}, {p2})")


def as_int8(b):
    """Reinterpret byte(s) 0..255 as two's complement values -128..127."""
    return ((np.asarray(b) + 128) & 0xFF) - 128


def candidates(c_embedded: int, p1: int, p2: int) -> np.ndarray:
    """All bytes agreeing with ``c_embedded`` at bits ``p1`` and ``p2``, ascending."""
    _check_positions(p1, p2)
    mask = (1 << p1) | (1 << p2)
    allv = np.arange(256, dtype=np.int64)
    return allv[(allv & mask) == (c_embedded & mask)]


def adjust(
    c_original: int,
    c_embedded: int,
    p1: int,
    p2: int,
    feasible: Optional[Feasible] = None,
    signed: bool = False,
) -> Adjustment:
    cand = candidates(c_embedded, p1, p2)
    if signed:
        values = as_int8(cand)
        order = np.argsort(values, kind="stable")
        cand, values = cand[order], values[order]
        dist = np.abs(values - int(as_int8(c_original)))
    else:
        dist = np.abs(cand - c_original)
    if feasible is not None:
        ok = np.fromiter((feasible(int(v)) for v in cand), dtype=bool, count=cand.size)
        if ok.any():
            dist = np.where(ok, dist, np.iinfo(np.int64).max)
        else:
            # nothing keeps the block in range: fall back to the unconstrained pick
            return Adjustment(int(cand[np.argmin(dist)]), False)
    # argmin returns the first minimum, and cand is ascending in value
    return Adjustment(int(cand[np.argmin(dist)]), True)


# 64 candidate bytes for every (p1, p2) and payload-bit pattern, ascending.
def _candidate_table() -> np.ndarray:
    table = np.empty((4, 4, 4, 64), dtype=np.int64)
    allv = np.arange(256, dtype=np.int64)
    for p1 in range(4):
        for p2 in range(4):
            if p1 == p2:
                table[p1, p2] = -1
                continue
            for pattern in range(4):
                want = ((pattern >> 1) & 1) << p1 | (pattern & 1) << p2
                mask = (1 << p1) | (1 << p2)
                table[p1, p2, pattern] = allv[(allv & mask) == want]
    return table


_TABLE = _candidate_table()


def candidate_rows(c_embedded: np.ndarray, p1: np.ndarray, p2: np.ndarray) -> np.ndarray:
    """Vectorised :func:`candidates`: returns an (n, 64) array."""
    c_embedded = np.asarray(c_embedded, dtype=np.int64)
    p1 = np.asarray(p1, dtype=np.int64)
    p2 = np.asarray(p2, dtype=np.int64)
    if np.any(p1 == p2):
        raise SamePosition("embedding positions must differ")
    pattern = ((c_embedded >> p1) & 1) << 1 | ((c_embedded >> p2) & 1)
    return _TABLE[p1, p2, pattern]


def adjust_many(
    c_original: np.ndarray,
    c_embedded: np.ndarray,
    p1: np.ndarray,
    p2: np.ndarray,
    feasible: Optional[Callable[[np.ndarray], np.ndarray]] = None,
    signed: bool = False,
) -> tuple[np.ndarray, np.ndarray]:
    """Array form of :func:`adjust`.

    ``feasible`` receives the (n, 64) candidate byte matrix and must return
    a boolean matrix of the same shape. Returns ``(bytes, feasible_flags)``.
    """
    cand = candidate_rows(c_embedded, p1, p2)
    c_original = np.asarray(c_original, dtype=np.int64)
    if signed:
        values, target = as_int8(cand), as_int8(c_original)
    else:
        values, target = cand, c_original
    # distance first, then smaller value; values span < 512
    score = np.abs(values - target[:, None]) * 512 + (values + 256)
    rows = np.arange(len(cand))
    if feasible is None:
        return cand[rows, np.argmin(score, axis=1)], np.ones(len(cand), bool)
    ok = np.asarray(feasible(cand), dtype=bool)
    any_ok = ok.any(axis=1)
    score = np.where(ok | ~any_ok[:, None], score, np.iinfo(np.int64).max)
    return cand[rows, np.argmin(score, axis=1)], any_ok

import itertools

import numpy as np
import pytest

from atfdwt.errors import SamePosition
from atfdwt.fidelity import adjust, adjust_many
from atfdwt.stego import embed_pair

PAIRS = [(0, 1), (1, 2), (2, 3), (3, 0)]

# pre-adjustment differences for each position pair
CASE_DIFFS = {
    (0, 1): {0, 1, -1, 2, -2, 3, -3},
    (1, 2): {0, 2, -2, 4, -4, 6, -6},
    (2, 3): {0, 4, -4, 8, -8, 12, -12},
    (3, 0): {0, 1, -1, 7, -7, 8, -8, 9, -9},
}


def signed(b):
    return b - 256 if b >= 128 else b


def oracle(c_original, c_embedded, p1, p2, feasible=lambda v: True, as_signed=False):
    """Scan all 256 bytes; keep payload bits; minimise distance, then value."""
    value = signed if as_signed else (lambda b: b)
    keep = [
        v
        for v in range(256)
        if ((v >> p1) & 1) == ((c_embedded >> p1) & 1) and ((v >> p2) & 1) == ((c_embedded >> p2) & 1)
    ]
    ok = [v for v in keep if feasible(v)] or keep
    return min(ok, key=lambda v: (abs(value(c_original) - value(v)), value(v)))


@pytest.mark.parametrize(
    "orig, emb, pair, expected",
    [
        (224, 236, (2, 3), 223),
        (78, 76, (1, 2), 77),
        (73, 69, (2, 3), 71),
        (70, 64, (1, 2), 72),
        (52, 60, (2, 3), 47),
        (15, 12, (0, 1), 16),
        (30, 23, (3, 0), 33),
        (65, 65, (0, 1), 65),
    ],
)
def test_worked_examples(orig, emb, pair, expected):
    assert adjust(orig, emb, *pair).value == expected


def test_matches_oracle_exhaustively():
    for c, (p1, p2), b1, b2 in itertools.product(range(256), PAIRS, (0, 1), (0, 1)):
        e = embed_pair(c, b1, b2, p1, p2)
        assert adjust(c, e, p1, p2).value == oracle(c, e, p1, p2)


def test_signed_matches_oracle_exhaustively():
    for c, (p1, p2), b1, b2 in itertools.product(range(256), PAIRS, (0, 1), (0, 1)):
        e = embed_pair(c, b1, b2, p1, p2)
        assert adjust(c, e, p1, p2, signed=True).value == oracle(c, e, p1, p2, as_signed=True)


def test_feasibility_constraint_respected(rng):
    for _ in range(300):
        c = int(rng.integers(256))
        p1, p2 = PAIRS[rng.integers(4)]
        e = embed_pair(c, *rng.integers(0, 2, 2), p1, p2)
        lo, hi = sorted(rng.integers(0, 256, 2))
        feas = lambda v: lo <= v <= hi
        got = adjust(c, e, p1, p2, feasible=feas)
        assert got.value == oracle(c, e, p1, p2, feasible=feas)
        assert got.feasible == any(feas(v) for v in range(256) if ((v ^ e) >> p1) & 1 == 0 and ((v ^ e) >> p2) & 1 == 0)


def test_infeasible_falls_back_to_unconstrained():
    got = adjust(224, 236, 2, 3, feasible=lambda v: False)
    assert got == (223, False)


def test_bit_preservation_and_residual_bound():
    for c, (p1, p2), b1, b2 in itertools.product(range(256), PAIRS, (0, 1), (0, 1)):
        e = embed_pair(c, b1, b2, p1, p2)
        v = adjust(c, e, p1, p2).value
        assert (v >> p1) & 1 == b1 and (v >> p2) & 1 == b2
        assert abs(c - v) <= abs(c - e)
        assert abs(c - v) <= 15


def test_case_difference_ranges():
    for (p1, p2), allowed in CASE_DIFFS.items():
        seen = set()
        for c, b1, b2 in itertools.product(range(256), (0, 1), (0, 1)):
            seen.add(c - embed_pair(c, b1, b2, p1, p2))
        assert seen == allowed


def test_vectorised_matches_scalar(rng):
    n = 2000
    c = rng.integers(0, 256, n)
    idx = rng.integers(0, 4, n)
    p1 = np.array([PAIRS[i][0] for i in idx])
    p2 = np.array([PAIRS[i][1] for i in idx])
    e = np.array([embed_pair(int(a), *rng.integers(0, 2, 2), int(x), int(y)) for a, x, y in zip(c, p1, p2)])
    for as_signed in (False, True):
        got, ok = adjust_many(c, e, p1, p2, signed=as_signed)
        assert ok.all()
        want = [adjust(int(a), int(b), int(x), int(y), signed=as_signed).value for a, b, x, y in zip(c, e, p1, p2)]
        assert got.tolist() == want


def test_same_position_rejected():
    with pytest.raises(SamePosition):
        adjust(1, 1, 2, 2)

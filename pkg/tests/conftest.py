import numpy as np
import pytest

from atfdwt.ppm import RasterImage

# 4x4 pixel block used for the decomposition walk-through
FIG3_PLANE = np.array(
    [
        [191, 187, 206, 198],
        [171, 151, 186, 186],
        [130, 106, 116, 168],
        [112, 120, 136, 140],
    ]
)

# vo plane before embedding, after embedding, and after adjustment
FIG4_VO = np.array([[65, 78, 73, 30], [58, 78, 38, 32], [56, 73, 56, 35], [59, 70, 52, 39]])
FIG5_VO = np.array([[65, 76, 69, 23], [59, 74, 42, 33], [57, 77, 60, 35], [59, 64, 60, 39]])
FIG6_VO_PRINTED = np.array([[65, 77, 71, 33], [59, 75, 40, 33], [57, 76, 60, 35], [59, 72, 60, 39]])
FIG_PAYLOAD = bytes([0b10011001, 0b11100101, 0b10011101, 0b11001101])


@pytest.fixture
def rng():
    return np.random.default_rng(20111)


def random_cover(rng, h, w, c=3, lo=16, hi=239) -> RasterImage:
    return RasterImage(rng.integers(lo, hi + 1, size=(h, w, c)))


def random_secret_for(rng, cover: RasterImage) -> RasterImage:
    return RasterImage(rng.integers(0, 256, size=(cover.height // 4, cover.width // 4, cover.channels)))


def smooth_cover(seed: int, size: int = 512, noise: float = 6.0) -> RasterImage:
    """Smooth gradients plus gaussian noise, a stand-in for a photograph."""
    g = np.random.default_rng(seed)
    y, x = np.mgrid[0:size, 0:size].astype(float)
    phase = g.uniform(0, 2 * np.pi, 3)
    base = np.stack(
        [
            60 + 0.25 * x + 0.1 * y,
            128 + 70 * np.sin(x / 45.0 + phase[1]) * np.cos(y / 60.0 + phase[2]),
            210 - 0.2 * (x + y) + 20 * np.sin(y / 30.0 + phase[0]),
        ],
        axis=-1,
    )
    base = base + g.normal(0, noise, base.shape)
    return RasterImage(np.clip(np.round(base), 0, 255).astype(np.int64))


_AC_RESULTS = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _AC_RESULTS[report.nodeid] = report.outcome
    elif "test_acceptance.py" in report.nodeid and report.when == "setup" and report.outcome != "passed":
        _AC_RESULTS[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _AC_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in _AC_RESULTS.items():
        name = nodeid.split("::")[-1]
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from atfdwt.errors import DimensionMismatch, EmptyImage, ZeroSignal
from atfdwt.metrics import MetricsReport, image_fidelity, mse, psnr, psnr_from_mse, std_dev
from atfdwt.ppm import RasterImage


def img(values):
    return RasterImage(np.asarray(values).reshape(1, -1, 1))


def test_mse_examples():
    a = img([10, 20, 30, 40])
    assert mse(a, a) == 0
    assert mse(img([10]), img([12])) == 4.0
    assert mse(img([1, 2, 3, 4]), img([1, 2, 3, 6])) == 1.0


def test_mse_counts_every_channel():
    a = RasterImage(np.zeros((1, 1, 3)))
    b = RasterImage(np.array([[[3, 0, 0]]]))
    assert mse(a, b) == 3.0


@pytest.mark.parametrize("err, db", [(3.293662, 42.954014), (4.343258, 41.752647)])
def test_psnr_from_table(err, db):
    assert psnr_from_mse(err) == pytest.approx(db, abs=1e-6)


def test_psnr_identical_is_inf():
    a = img([5, 6])
    assert psnr(a, a) == math.inf


def test_std_dev():
    assert std_dev(img([7, 7, 7])) == 0
    assert std_dev(img([0, 2])) == 1.0
    assert std_dev(img([0, 0, 0, 4])) == pytest.approx(math.sqrt(3), abs=1e-12)
    with pytest.raises(EmptyImage):
        std_dev(np.zeros(0))


def test_image_fidelity():
    a = img([10, 20])
    assert image_fidelity(a, a) == 1.0
    assert image_fidelity(img([10]), img([12])) == pytest.approx(0.96)
    with pytest.raises(ZeroSignal):
        image_fidelity(img([0, 0]), img([0, 1]))
    assert image_fidelity(img([0, 0]), img([0, 0])) == 1.0


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        mse(img([1, 2]), img([1, 2, 3]))


samples = arrays(np.int64, st.integers(1, 20), elements=st.integers(0, 255))


@given(samples, st.data())
def test_symmetry(a, data):
    b = data.draw(arrays(np.int64, a.shape, elements=st.integers(0, 255)))
    assert mse(a, b) == mse(b, a)
    assert psnr(a, b) == psnr(b, a)


@given(samples, st.data())
def test_monotone_in_one_gap(a, data):
    a = np.clip(a, 1, 250)
    i = data.draw(st.integers(0, a.size - 1))
    b1 = a.copy()
    b1[i] += 2
    b2 = a.copy()
    b2[i] += 5
    assert mse(a, b2) > mse(a, b1)
    assert psnr(a, b2) < psnr(a, b1)
    assert image_fidelity(a, b2) < image_fidelity(a, b1)


def test_report_invariants_and_text():
    a = img([10, 20, 30, 40])
    r = MetricsReport.compare(a, a)
    assert r.mse == 0 and math.isinf(r.psnr_db) and r.image_fidelity == 1.0
    assert "psnr_db: inf" in r.to_text()
    r2 = MetricsReport.compare(a, img([10, 20, 30, 42]))
    assert r2.mse == 1.0 and r2.image_fidelity < 1
    assert "mse: 1.000000" in r2.to_text()

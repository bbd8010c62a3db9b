"""scikit-learn style wrappers.

``HaarDWT`` is a stateless transformer from images to subbands.
``ATFDWTEmbedder`` learns a secret image in ``fit`` and turns covers into
stego images in ``transform``; ``ATFDWTExtractor`` recovers the secret.
All three follow the usual ``get_params``/``set_params`` contract, so they
can be cloned and dropped into pipelines.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .dwt import SubbandPlane, forward_haar, inverse_haar
from .errors import DimensionMismatch
from .pipeline import embed_image, extract_image, image_to_payload, secret_shape
from .ppm import RasterImage
from .stego import StegoKey


def check_raster(X) -> RasterImage:
    """Coerce ``X`` (RasterImage or 2-D/3-D array of 8-bit samples) to a RasterImage."""
    if isinstance(X, RasterImage):
        return X
    arr = np.asarray(X)
    if arr.dtype.kind not in "iub":
        if arr.dtype.kind == "f" and np.all(arr == np.round(arr)):
            arr = arr.astype(np.int64)
        else:
            raise TypeError(f"expected integer samples, got dtype {arr.dtype}")
    return RasterImage(arr)


def check_key(key_s, coding="twos") -> StegoKey:
    return StegoKey(int(key_s) if isinstance(key_s, np.integer) else key_s, coding)


class HaarDWT(TransformerMixin, BaseEstimator):
    """One-level integer Haar decomposition per channel."""

    def fit(self, X, y=None):
        img = check_raster(X)
        self.n_channels_ = img.channels
        self.image_shape_ = img.shape
        return self

    def transform(self, X) -> list[SubbandPlane]:
        img = check_raster(X)
        return [forward_haar(img.pixels[:, :, c].astype(np.int64)) for c in range(img.channels)]

    def inverse_transform(self, subbands) -> np.ndarray:
        """Unclamped (height, width, channels) reconstruction."""
        if isinstance(subbands, SubbandPlane):
            subbands = [subbands]
        return np.stack([inverse_haar(sb) for sb in subbands], axis=-1)


class ATFDWTEmbedder(TransformerMixin, BaseEstimator):
    """Hide a secret image in the vertical-orientation subband of covers.

    Parameters
    ----------
    key_s : int, default=4
        Hash modulus in [2, 7] selecting the bit positions.
    adjust : bool, default=True
        Apply fidelity adjustment after writing the payload bits.
    coding : {"twos", "sign"}, default="twos"
        How a vo coefficient maps to the byte that carries the bits.

    Attributes
    ----------
    secret_ : RasterImage
    payload_ : bytes
    report_ : EmbedReport
        Accounting for the most recent ``transform`` call.
    """

    def __init__(self, key_s=4, adjust=True, coding="twos"):
        self.key_s = key_s
        self.adjust = adjust
        self.coding = coding

    def fit(self, X, y=None):
        secret = check_raster(X)
        check_key(self.key_s, self.coding)
        self.secret_ = secret
        self.payload_ = image_to_payload(secret)
        return self

    def transform(self, X) -> RasterImage:
        check_is_fitted(self, "secret_")
        cover = check_raster(X)
        stego, report = embed_image(cover, self.secret_, check_key(self.key_s, self.coding), adjust=bool(self.adjust))
        self.report_ = report
        return stego

    def expected_cover_shape(self) -> tuple[int, int, int]:
        check_is_fitted(self, "secret_")
        h, w, c = self.secret_.shape
        return 4 * h, 4 * w, c


class ATFDWTExtractor(TransformerMixin, BaseEstimator):
    """Recover the secret carried by a stego image."""

    def __init__(self, key_s=4, coding="twos"):
        self.key_s = key_s
        self.coding = coding

    def fit(self, X=None, y=None):
        check_key(self.key_s, self.coding)
        return self

    def transform(self, X) -> RasterImage:
        stego = check_raster(X)
        return extract_image(stego, check_key(self.key_s, self.coding))

    def score(self, X, y) -> float:
        """Fraction of secret bytes recovered exactly from stego ``X`` given true secret ``y``."""
        recovered = self.transform(X)
        truth = check_raster(y)
        if truth.shape != secret_shape(check_raster(X).shape):
            raise DimensionMismatch("secret shape does not match the stego image")
        return float(np.mean(recovered.pixels == truth.pixels))

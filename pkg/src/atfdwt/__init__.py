"""Authentication by hiding a secret image in the integer Haar vertical subband."""

from .dwt import SubbandPlane, forward_haar, inverse_haar, reconstruct_block
from .errors import AtfdwtError
from .estimator import ATFDWTEmbedder, ATFDWTExtractor, HaarDWT
from .fidelity import adjust
from .metrics import MetricsReport, image_fidelity, mse, psnr, std_dev
from .pipeline import embed_image, extract_image, verify_roundtrip
from .ppm import RasterImage, channel_plane, interleave_planes, parse_ppm, write_ppm
from .stego import (
    EmbedReport,
    StegoKey,
    capacity_bytes,
    embed_pair,
    embed_payload,
    extract_pair,
    extract_payload,
    position_pair,
)

__all__ = [
    "ATFDWTEmbedder", "ATFDWTExtractor", "AtfdwtError", "EmbedReport", "HaarDWT",
    "MetricsReport", "RasterImage", "StegoKey", "SubbandPlane", "adjust",
    "capacity_bytes", "channel_plane", "embed_image", "embed_pair", "embed_payload",
    "extract_image", "extract_pair", "extract_payload", "forward_haar", "image_fidelity",
    "interleave_planes", "inverse_haar", "mse", "parse_ppm", "position_pair", "psnr",
    "reconstruct_block", "std_dev", "verify_roundtrip", "write_ppm",
]

"""Corpus benchmark: embed one secret into every cover and tabulate quality metrics."""

from __future__ import annotations

import csv
import io
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional

import numpy as np

from .errors import AtfdwtError
from .metrics import MetricsReport, format_value
from .pipeline import embed_image
from .ppm import RasterImage, read_ppm
from .stego import StegoKey

log = logging.getLogger(__name__)

COLUMNS = ("image", "MSE", "PSNR", "SD_orig", "SD_stego", "IF")


@dataclass(frozen=True)
class BenchRow:
    name: str
    metrics: MetricsReport

    def values(self) -> tuple[float, ...]:
        m = self.metrics
        return (m.mse, m.psnr_db, m.sd_original, m.sd_stego, m.image_fidelity)


def run_bench(
    covers: Iterable[Path], secret: RasterImage, key: StegoKey, warn=None
) -> list[BenchRow]:
    """Process covers in the given order; unreadable or ill-sized files are skipped."""
    rows = []
    for path in covers:
        try:
            cover = read_ppm(path)
            stego, _ = embed_image(cover, secret, key)
        except (OSError, AtfdwtError) as exc:
            msg = f"warning: skipping {path.name}: {exc}"
            log.warning(msg)
            if warn is not None:
                warn(msg)
            continue
        rows.append(BenchRow(path.stem, MetricsReport.compare(cover, stego)))
    return rows


def averages(rows: list[BenchRow]) -> tuple[float, ...]:
    # column-wise means, PSNR included (mean of per-image dB values)
    return tuple(float(v) for v in np.mean([r.values() for r in rows], axis=0))


def format_table(rows: list[BenchRow]) -> str:
    body = [(r.name, *map(format_value, r.values())) for r in rows]
    body.append(("Average", *map(format_value, averages(rows))))
    table = [COLUMNS, *body]
    widths = [max(len(r[i]) for r in table) for i in range(len(COLUMNS))]
    lines = []
    for r in table:
        cells = [r[0].ljust(widths[0])] + [v.rjust(w) for v, w in zip(r[1:], widths[1:])]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def format_csv(rows: list[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for r in rows:
        writer.writerow([r.name, *map(format_value, r.values())])
    writer.writerow(["Average", *map(format_value, averages(rows))])
    return buf.getvalue()


def list_corpus(directory: Path, exclude: Optional[Path] = None) -> list[Path]:
    files = sorted(p for p in directory.iterdir() if p.is_file() and p.suffix.lower() == ".ppm")
    if exclude is not None:
        files = [p for p in files if p.resolve() != exclude.resolve()]
    return files

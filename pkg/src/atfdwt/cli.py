"""Command line interface.

Exit codes: 0 success, 1 verification mismatch, 2 usage or precondition
failure, 3 I/O or parse failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench
from .dwt import write_subband_dump
from .errors import (
    DimensionMismatch,
    OddDimensions,
    PayloadTooLarge,
    PPMError,
)
from .metrics import MetricsReport
from .pipeline import decompose, embed_image, extract_image, verify_roundtrip
from .ppm import read_ppm, save_ppm
from .stego import CODINGS, StegoKey

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_IO = 3

_PRECONDITION = (DimensionMismatch, OddDimensions, PayloadTooLarge)


class CommandError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _key(value: str) -> int:
    try:
        s = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {value!r}") from None
    if not 2 <= s <= 7:
        raise argparse.ArgumentTypeError(f"key must be in [2, 7], got {s}")
    return s


def _load(path: Path):
    try:
        return read_ppm(path)
    except (OSError, PPMError) as exc:
        raise CommandError(f"cannot read {path}: {exc}", EXIT_IO) from exc


def _save(path: Path, img, fmt: str) -> None:
    try:
        save_ppm(path, img, fmt)
    except OSError as exc:
        raise CommandError(f"cannot write {path}: {exc}", EXIT_IO) from exc


def _write_text(path: Path, text: str) -> None:
    try:
        path.write_text(text)
    except OSError as exc:
        raise CommandError(f"cannot write {path}: {exc}", EXIT_IO) from exc


def cmd_embed(args) -> int:
    cover, secret = _load(args.cover), _load(args.secret)
    stego, report = embed_image(cover, secret, StegoKey(args.key_s, args.coding), adjust=not args.no_adjust)
    _save(args.out, stego, args.format)
    text = report.to_text()
    if args.report:
        _write_text(args.report, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_extract(args) -> int:
    stego = _load(args.stego)
    _save(args.out, extract_image(stego, StegoKey(args.key_s, args.coding)), args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    cover, secret = _load(args.cover), _load(args.secret)
    res = verify_roundtrip(cover, secret, StegoKey(args.key_s, args.coding))
    print(f"matched: {res.matched}/{res.total} bytes")
    print(f"clamped_blocks: {res.clamped_blocks}")
    print("authenticated" if res.ok else "NOT authenticated")
    return EXIT_OK if res.ok else EXIT_MISMATCH


def cmd_metrics(args) -> int:
    report = MetricsReport.compare(_load(args.original), _load(args.candidate))
    text = report.to_text()
    sys.stdout.write(text)
    if args.report:
        _write_text(args.report, text)
    return EXIT_OK


def cmd_transform(args) -> int:
    img = _load(args.input)
    subbands = decompose(img)
    try:
        args.out_dir.mkdir(parents=True, exist_ok=True)
        for c, sb in enumerate(subbands):
            with open(args.out_dir / f"channel{c}.subbands", "w") as fh:
                write_subband_dump(sb, fh)
    except OSError as exc:
        raise CommandError(f"cannot write dumps: {exc}", EXIT_IO) from exc
    return EXIT_OK


def cmd_bench(args) -> int:
    if not args.corpus.is_dir():
        raise CommandError(f"not a directory: {args.corpus}", EXIT_IO)
    secret = _load(args.secret)
    covers = bench.list_corpus(args.corpus, exclude=args.secret)
    if not covers:
        raise CommandError(f"no .ppm covers in {args.corpus}", EXIT_USAGE)
    rows = bench.run_bench(covers, secret, StegoKey(args.key_s, args.coding), warn=lambda m: print(m, file=sys.stderr))
    if not rows:
        raise CommandError("no cover could be processed", EXIT_USAGE)
    sys.stdout.write(bench.format_table(rows))
    _write_text(args.out, bench.format_csv(rows))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="atfdwt", description="Hide and authenticate a secret image in the Haar vo subband."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_key(p):
        p.add_argument("--key-s", type=_key, required=True, help="hash modulus in [2, 7]")
        p.add_argument(
            "--coding",
            choices=CODINGS,
            default="twos",
            help="coefficient byte: two's complement (default) or sign-magnitude",
        )

    def add_format(p):
        p.add_argument("--format", choices=("P6", "P3"), default="P6", help="output PPM flavour")

    p = sub.add_parser("embed", help="hide a secret image in a cover")
    p.add_argument("--cover", type=Path, required=True)
    p.add_argument("--secret", type=Path, required=True)
    add_key(p)
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--report", type=Path)
    p.add_argument("--no-adjust", action="store_true", help="skip fidelity adjustment")
    add_format(p)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("extract", help="recover the secret from a stego image")
    p.add_argument("--stego", type=Path, required=True)
    add_key(p)
    p.add_argument("--out", type=Path, required=True)
    add_format(p)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("verify", help="embed and extract in memory, compare with the secret")
    p.add_argument("--cover", type=Path, required=True)
    p.add_argument("--secret", type=Path, required=True)
    add_key(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("metrics", help="MSE, PSNR, SD and IF for an image pair")
    p.add_argument("--original", type=Path, required=True)
    p.add_argument("--candidate", type=Path, required=True)
    p.add_argument("--report", type=Path)
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("transform", help="dump the four subbands of every channel")
    p.add_argument("--in", dest="input", type=Path, required=True)
    p.add_argument("--out-dir", type=Path, required=True)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("bench", help="metrics table over a directory of covers")
    p.add_argument("--corpus", type=Path, required=True)
    p.add_argument("--secret", type=Path, required=True)
    add_key(p)
    p.add_argument("--out", type=Path, required=True, help="CSV output path")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CommandError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except _PRECONDITION as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

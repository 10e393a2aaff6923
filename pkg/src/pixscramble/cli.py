"""Command line entry point: ``pixscramble encrypt|decrypt|analyze``.

Exit status is 0 on success, 1 on any input error (one line on stderr) and
2 on bad usage.
"""
from __future__ import annotations

import argparse
import os
import sys
import tempfile

from . import ppm
from .analysis import compare_report
from .cipher import (
    ChannelPermutation,
    CipherMetadata,
    decrypt_image,
    encrypt_image,
    read_metadata,
    write_metadata,
)
from .errors import PixScrambleError
from .raster import Region, extract_region


def _atomic_write(path: str, data: bytes) -> None:
    # temp file in the target directory so the final rename stays on one filesystem
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".pixscramble-", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _region_arg(text: str) -> Region:
    try:
        return Region.parse(text)
    except (ValueError, IndexError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _perm_arg(text: str) -> ChannelPermutation:
    try:
        return ChannelPermutation.from_name(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _resolve(args) -> tuple[Region, ChannelPermutation]:
    """Combine ``--meta`` with explicit flags; explicit flags win."""
    region, cp = args.region, args.channel_perm
    if args.meta:
        with open(args.meta, encoding="utf-8", newline="") as fh:
            meta = read_metadata(fh.read())
        region = region or meta.region
        cp = cp or meta.channel_perm
    if region is None:
        raise PixScrambleError("no region given: pass --region or --meta")
    return region, cp or ChannelPermutation.IDENTITY


def cmd_encrypt(args) -> None:
    image = ppm.load(args.input)
    cp = args.channel_perm or ChannelPermutation.IDENTITY
    cipher = encrypt_image(image, args.region, cp)
    _atomic_write(args.output, ppm.write_ppm(cipher))
    if args.meta_out:
        text = write_metadata(CipherMetadata(args.region, cp))
        _atomic_write(args.meta_out, text.encode("utf-8"))


def cmd_decrypt(args) -> None:
    region, cp = _resolve(args)
    image = ppm.load(args.input)
    _atomic_write(args.output, ppm.write_ppm(decrypt_image(image, region, cp)))


def cmd_analyze(args) -> None:
    region, _ = _resolve(args)
    plain = ppm.load(args.plain)
    cipher = ppm.load(args.cipher)
    report = compare_report(extract_region(plain, region), extract_region(cipher, region))
    _atomic_write(args.output, report.to_csv().encode("utf-8"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pixscramble",
        description="Reversibly scramble a rectangular region of a binary PPM image.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    region_help = "0-based half-open rows and columns, R0:R1,C0:C1"
    perm_help = "channel interchange: identity, rgb2gbr, rgb2brg, rgb2rbg, rgb2grb, rgb2bgr"

    enc = sub.add_parser("encrypt", help="scramble a region")
    enc.add_argument("--in", dest="input", required=True, metavar="PATH")
    enc.add_argument("--out", dest="output", required=True, metavar="PATH")
    enc.add_argument("--region", type=_region_arg, required=True, help=region_help)
    enc.add_argument("--channel-perm", type=_perm_arg, help=perm_help)
    enc.add_argument("--meta-out", metavar="PATH", help="write a sidecar with the decryption parameters")
    enc.set_defaults(func=cmd_encrypt)

    dec = sub.add_parser("decrypt", help="restore a scrambled region")
    dec.add_argument("--in", dest="input", required=True, metavar="PATH")
    dec.add_argument("--out", dest="output", required=True, metavar="PATH")
    dec.add_argument("--region", type=_region_arg, help=region_help)
    dec.add_argument("--meta", metavar="PATH", help="sidecar written by encrypt --meta-out")
    dec.add_argument("--channel-perm", type=_perm_arg, help=perm_help)
    dec.set_defaults(func=cmd_decrypt)

    ana = sub.add_parser("analyze", help="write a CSV comparing plain and cipher regions")
    ana.add_argument("--plain", required=True, metavar="PATH")
    ana.add_argument("--cipher", required=True, metavar="PATH")
    ana.add_argument("--region", type=_region_arg, help=region_help)
    ana.add_argument("--meta", metavar="PATH")
    ana.add_argument("--out", dest="output", required=True, metavar="PATH")
    ana.set_defaults(func=cmd_analyze, channel_perm=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command in ("decrypt", "analyze") and not (args.region or args.meta):
        parser.print_usage(sys.stderr)
        print(f"pixscramble {args.command}: error: one of --region or --meta is required", file=sys.stderr)
        return 2
    try:
        args.func(args)
    except (PixScrambleError, ValueError, IndexError, OSError) as exc:
        print(f"pixscramble: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command line interface.

Exit codes: 0 on success, 1 for usage or parse errors (including
unreadable inputs), 2 when ``verify`` finds a failing invariant.
"""

from __future__ import annotations

import argparse
import csv
import logging
import sys

import numpy as np

from .imaging import DEFAULT_EPS, DiskImage, image_field, load_image, pixel_polar, run_pipeline, save_image
from .parser import ParseError
from .transform import analyze, evaluate, read_csv, write_csv
from .verification import run_checks

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _size(text: str) -> tuple[int, int]:
    try:
        w, h = (int(v) for v in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"size must look like WxH, got {text!r}") from None
    if w < 1 or h < 1:
        raise argparse.ArgumentTypeError("size must be positive")
    return w, h


def _cmd_analyze(args) -> int:
    img = load_image(args.image)
    if args.intensity:
        img = DiskImage(np.sqrt(img.values))
    table = analyze(image_field(img, args.max_k, args.max_l), args.max_k, args.max_l)
    write_csv(table, args.out or sys.stdout)
    return EXIT_OK


def _cmd_synthesize(args) -> int:
    table = read_csv(args.coeffs)
    w, h = args.size
    r, theta = pixel_polar(w, h)
    amplitude = np.abs(evaluate(table, np.minimum(r, 1.0), theta))
    amplitude[r > 1.0] = 0.0
    scale = amplitude.max()
    values = amplitude / scale if scale > 0 else amplitude
    if args.intensity:
        values = values**2
    save_image(values, args.out, bits=args.bits)
    print(f"output_scale={scale:.17g}")
    return EXIT_OK


def _cmd_apply(args) -> int:
    img = load_image(args.image)
    result = run_pipeline(
        img,
        args.op,
        args.eps,
        max_k=args.max_k,
        max_l=args.max_l,
        intensity=args.intensity,
        out_image=args.out,
        out_input_csv=args.coeffs_in,
        out_output_csv=args.coeffs_out,
        out_report=args.report,
        bits=args.bits,
    )
    for key, value in vars(result.report).items():
        print(f"{key}={value}")
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    table = read_csv(args.coeffs)
    total = table.energy()
    with open(args.out, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["k", "l", "n", "m", "power", "fraction"])
        for k in range(table.max_k + 1):
            for l in range(table.max_l + 1):
                power = abs(table[k, l]) ** 2
                writer.writerow([k, l, k + l, k - l, f"{power:.17g}", f"{power / total if total else 0.0:.17g}"])
    return EXIT_OK


def _cmd_verify(args) -> int:
    results = run_checks(args.max_index, args.tol)
    for res in results:
        print(res.line())
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed} passed, {failed} failed")
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zernike-uea", description="Zernike-basis image transforms by su(1,1)+su(1,1) operators.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="decompose an image into Zernike coefficients")
    p.add_argument("image")
    p.add_argument("--max-k", type=int, default=12)
    p.add_argument("--max-l", type=int, default=12)
    p.add_argument("--out", help="coefficient CSV (stdout if omitted)")
    p.add_argument("--intensity", action="store_true", help="pixels hold |f|^2 rather than |f|")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("synthesize", help="render a coefficient CSV as an image")
    p.add_argument("coeffs")
    p.add_argument("--size", type=_size, default=(256, 256))
    p.add_argument("--out", required=True)
    p.add_argument("--bits", type=int, choices=(8, 16), default=8)
    p.add_argument("--intensity", action="store_true", help="write |f|^2 rather than |f|")
    p.set_defaults(func=_cmd_synthesize)

    p = sub.add_parser("apply", help="transform an image by an operator expression")
    p.add_argument("image")
    p.add_argument("--op", required=True, help='operator text, e.g. "A+ B+" or "2*A3 - K"')
    p.add_argument("--eps", type=float, default=DEFAULT_EPS, help="relative tail tolerance for truncation")
    p.add_argument("--max-k", type=int, default=12)
    p.add_argument("--max-l", type=int, default=12)
    p.add_argument("--out", required=True)
    p.add_argument("--report")
    p.add_argument("--coeffs-in", help="CSV for the truncated input coefficients")
    p.add_argument("--coeffs-out", help="CSV for the transformed coefficients")
    p.add_argument("--bits", type=int, choices=(8, 16), default=8)
    p.add_argument("--intensity", action="store_true")
    p.set_defaults(func=_cmd_apply)

    p = sub.add_parser("spectrum", help="per-mode power of a coefficient CSV")
    p.add_argument("coeffs")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("verify", help="run the numerical invariant suite")
    p.add_argument("--max-index", type=int, default=10)
    p.add_argument("--tol", type=float, default=None, help="override every floating tolerance")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    for name in ("max_k", "max_l", "max_index"):
        if getattr(args, name, 0) < 0:
            parser.error(f"--{name.replace('_', '-')} must be non-negative")
    if getattr(args, "eps", 1.0) <= 0:
        parser.error("--eps must be positive")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

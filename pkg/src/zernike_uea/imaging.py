"""Raster images on the inscribed unit disk and the decompose/transform pipeline.

Pixel ``(i, j)`` (column ``i``, row ``j``) of a ``W x H`` image maps to

    x = (2 i - (W - 1)) / (min(W, H) - 1),   y = (2 j - (H - 1)) / (min(W, H) - 1)

so the largest inscribed circle becomes the unit disk and
``(r, theta) = (hypot(x, y), atan2(y, x))``.
"""

from __future__ import annotations

import json
import logging
import os
from dataclasses import asdict, dataclass, field

import numpy as np
from PIL import Image
from scipy.ndimage import map_coordinates

from .ladder import OperatorExpr, apply_operator
from .parser import parse_operator
from .quadrature import QuadratureGrid, SampledField, build_grid
from .transform import (
    CoefficientTable,
    analyze,
    evaluate,
    parseval_gap,
    schwartz_norm,
    truncate_to_tolerance,
    write_csv,
)

__all__ = [
    "DiskImage",
    "load_image",
    "save_image",
    "render_image",
    "resample_to_grid",
    "image_field",
    "PipelineReport",
    "PipelineResult",
    "run_pipeline",
]

_log = logging.getLogger(__name__)

DEFAULT_EPS = 1e-4


def _scale(width: int, height: int) -> float:
    return float(max(min(width, height) - 1, 1))


def pixel_polar(width: int, height: int) -> tuple[np.ndarray, np.ndarray]:
    """``(r, theta)`` of every pixel center, arrays of shape ``(height, width)``."""
    s = _scale(width, height)
    x = (2 * np.arange(width) - (width - 1)) / s
    y = (2 * np.arange(height) - (height - 1)) / s
    xx, yy = np.meshgrid(x, y)
    return np.hypot(xx, yy), np.arctan2(yy, xx)


@dataclass(frozen=True, eq=False)
class DiskImage:
    """Real pixel values with the inscribed-disk mask.

    Values read from files lie in ``[0, 1]``; images rendered from
    coefficients may carry any finite real values.
    """

    values: np.ndarray
    mask: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        if values.ndim != 2 or values.size == 0:
            raise ValueError("image must be a non-empty 2-D array")
        if not np.all(np.isfinite(values)):
            raise ValueError("image values must be finite")
        object.__setattr__(self, "values", values)
        r, _ = pixel_polar(values.shape[1], values.shape[0])
        object.__setattr__(self, "mask", r <= 1.0)

    @property
    def width(self) -> int:
        return self.values.shape[1]

    @property
    def height(self) -> int:
        return self.values.shape[0]


def load_image(path: str | os.PathLike) -> DiskImage:
    """Read a grayscale raster (8 or 16 bit) with luminance scaled to ``[0, 1]``."""
    try:
        with Image.open(path) as im:
            im.load()
            mode = im.mode
            if mode in ("I", "I;16", "I;16B", "I;16L"):
                values = np.asarray(im, dtype=float) / 65535.0
            elif mode == "F":
                values = np.asarray(im, dtype=float)
            else:
                values = np.asarray(im.convert("L"), dtype=float) / 255.0
    except (OSError, ValueError) as exc:
        raise OSError(f"cannot read image {os.fspath(path)!r}: {exc}") from exc
    if values.size == 0:
        raise ValueError(f"{os.fspath(path)!r} is an empty image")
    return DiskImage(np.clip(values, 0.0, 1.0))


def save_image(values, path: str | os.PathLike, bits: int = 8) -> None:
    """Write values clipped to ``[0, 1]`` as an 8- or 16-bit grayscale raster."""
    values = np.clip(np.asarray(values.values if isinstance(values, DiskImage) else values, dtype=float), 0, 1)
    if bits == 8:
        im = Image.fromarray(np.round(values * 255).astype(np.uint8))
    elif bits == 16:
        im = Image.fromarray(np.round(values * 65535).astype(np.uint16))
    else:
        raise ValueError("bits must be 8 or 16")
    im.save(path)


def render_image(c: CoefficientTable, width: int, height: int, part: str = "real") -> DiskImage:
    """Render ``sum f[k, l] V[k, l]`` onto a pixel raster.

    Pixels outside the disk receive the value at the boundary along the same
    ray, which keeps bilinear reads near the rim accurate.

    Parameters
    ----------
    part : {"real", "abs"}
        Which real quantity of the complex field to store.
    """
    r, theta = pixel_polar(width, height)
    field_values = evaluate(c, np.minimum(r, 1.0), theta)
    if part == "real":
        values = field_values.real
    elif part == "abs":
        values = np.abs(field_values)
    else:
        raise ValueError(f"part must be 'real' or 'abs', got {part!r}")
    return DiskImage(values)


def resample_to_grid(img: DiskImage, grid: QuadratureGrid) -> SampledField:
    """Bilinear interpolation of the pixels at every quadrature node.

    Reads falling outside the raster return 0.
    """
    r, theta = grid.mesh()
    s = _scale(img.width, img.height)
    col = (r * np.cos(theta) * s + (img.width - 1)) / 2
    row = (r * np.sin(theta) * s + (img.height - 1)) / 2
    values = map_coordinates(img.values, [row.ravel(), col.ravel()], order=1, mode="constant", cval=0.0)
    return SampledField(grid, values.reshape(grid.shape))


def image_field(img: DiskImage, max_k: int, max_l: int, oversample: int = 2) -> SampledField:
    """Resample onto a grid ``oversample`` times finer than the mode budget needs."""
    degree = max(1, oversample) * (max_k + max_l)
    return resample_to_grid(img, build_grid(degree))


@dataclass
class PipelineReport:
    parseval_gap: float
    schwartz_norm: float
    k_max: int
    l_max: int
    output_scale: float

    def write(self, path: str | os.PathLike) -> None:
        with open(path, "w") as fh:
            json.dump(asdict(self), fh, indent=2)
            fh.write("\n")


@dataclass
class PipelineResult:
    input_coefficients: CoefficientTable
    output_coefficients: CoefficientTable
    output_image: DiskImage
    report: PipelineReport


def run_pipeline(
    img: DiskImage,
    operator: str | OperatorExpr,
    eps: float = DEFAULT_EPS,
    *,
    max_k: int = 12,
    max_l: int = 12,
    intensity: bool = False,
    out_image: str | os.PathLike | None = None,
    out_input_csv: str | os.PathLike | None = None,
    out_output_csv: str | os.PathLike | None = None,
    out_report: str | os.PathLike | None = None,
    bits: int = 8,
) -> PipelineResult:
    """Decompose ``img``, truncate, apply ``operator`` and re-synthesize.

    Pixel values are taken as the amplitude ``|f|``; with ``intensity=True``
    they are ``|f|**2`` on input and the output is squared back. The output
    image is ``|g|`` divided by its largest value inside the disk; that
    divisor is reported as ``output_scale``.
    """
    o = parse_operator(operator) if isinstance(operator, str) else operator
    if intensity:
        img = DiskImage(np.sqrt(np.clip(img.values, 0, None)))
    f = image_field(img, max_k, max_l)
    full = analyze(f, max_k, max_l)
    k_m, l_m = truncate_to_tolerance(full, eps)
    table = full.cropped(k_m, l_m)
    _log.info("truncated to k_M=%d, l_M=%d", k_m, l_m)
    result = apply_operator(o, table)

    r, theta = pixel_polar(img.width, img.height)
    amplitude = np.abs(evaluate(result, np.minimum(r, 1.0), theta))
    amplitude[~img.mask] = 0.0
    scale = float(amplitude.max()) if amplitude.size else 0.0
    values = amplitude / scale if scale > 0 else amplitude
    if intensity:
        values = values**2
    out = DiskImage(np.clip(values, 0.0, 1.0))

    report = PipelineReport(
        parseval_gap=parseval_gap(table, f),
        schwartz_norm=schwartz_norm(table),
        k_max=k_m,
        l_max=l_m,
        output_scale=scale,
    )
    if out_image is not None:
        save_image(out, out_image, bits=bits)
    if out_input_csv is not None:
        write_csv(table, out_input_csv)
    if out_output_csv is not None:
        write_csv(result, out_output_csv)
    if out_report is not None:
        report.write(out_report)
    return PipelineResult(table, result, out, report)

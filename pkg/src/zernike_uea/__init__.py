"""Images on the unit disk in the complex Zernike basis, transformed by
operators of the enveloping algebra of su(1,1) + su(1,1)."""

from .basis import (
    DomainError,
    ModeIndex,
    RadialIndex,
    RadialPolynomial,
    build_radial,
    eval_mode,
    eval_radial,
    radial_derivative,
    to_real_modes,
)
from .differential import apply_ladder_differential, verify_dr2_identity
from .imaging import DiskImage, load_image, render_image, resample_to_grid, run_pipeline, save_image
from .ladder import (
    Generator,
    OperatorExpr,
    UEAMonomial,
    apply_generator,
    apply_monomial,
    apply_operator,
    casimir,
    commutator_defect,
)
from .parser import OrderingError, ParseError, format_operator, parse_operator
from .quadrature import QuadratureGrid, SampledField, build_grid, inner_product, sample
from .transform import (
    CoefficientTable,
    analyze,
    parseval_gap,
    read_csv,
    schwartz_norm,
    synthesize,
    truncate_to_tolerance,
    write_csv,
)

__version__ = "0.1.0"

"""biqz: biquaternion arithmetic, Z transforms, and recurrence solving.

The algebra lives in :mod:`biqz.algebra`, series evaluation and the transform
rules in :mod:`biqz.ztransform`, the closed-form catalog in
:mod:`biqz.catalog`, recurrence iteration/verification in
:mod:`biqz.recurrence`, and the literal grammar in :mod:`biqz.parsing`.
"""

from . import errors
from .algebra import (
    ONE,
    ZERO,
    Biquaternion,
    as_biquaternion,
    cos_seq_term,
    exp,
    i,
    isclose,
    j,
    k,
    sin_seq_term,
)
from .catalog import CatalogEntry, build as build_catalog_entry
from .errors import (
    BiqzError,
    DivergentSeriesError,
    LiteralParseError,
    NoConvergenceError,
    OutsideROCError,
    ZeroDivisorError,
)
from .parsing import format_literal, parse
from .recurrence import (
    ForcingTerm,
    LinearRecurrence,
    VerificationReport,
    deconvolve_geometric,
    iterate,
    transform_value,
    verify_closed_form,
)
from .sequences import Sequence, advance, delay
from .ztransform import (
    TransformValue,
    advance_transform,
    convolve,
    delay_transform,
    geometric_scale,
    geometric_sum,
    geometric_remainder,
    index_scale_transform,
    linear_left,
    linear_right,
    linear_two_sided,
    roc_estimate,
    transform,
)

__version__ = "0.1.0"

__all__ = [
    "Biquaternion",
    "ONE",
    "ZERO",
    "i",
    "j",
    "k",
    "as_biquaternion",
    "isclose",
    "exp",
    "cos_seq_term",
    "sin_seq_term",
    "parse",
    "format_literal",
    "Sequence",
    "advance",
    "delay",
    "TransformValue",
    "transform",
    "geometric_sum",
    "geometric_remainder",
    "roc_estimate",
    "linear_left",
    "linear_right",
    "linear_two_sided",
    "geometric_scale",
    "advance_transform",
    "delay_transform",
    "index_scale_transform",
    "convolve",
    "CatalogEntry",
    "build_catalog_entry",
    "LinearRecurrence",
    "ForcingTerm",
    "VerificationReport",
    "iterate",
    "transform_value",
    "verify_closed_form",
    "deconvolve_geometric",
    "errors",
    "BiqzError",
    "ZeroDivisorError",
    "DivergentSeriesError",
    "NoConvergenceError",
    "OutsideROCError",
    "LiteralParseError",
    "__version__",
]

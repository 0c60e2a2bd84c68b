"""Exact geometry of Pascal lines on the conic z1^2 = z0*z2.

The package provides, entirely in rational arithmetic:

* binary forms in Cayley notation with transvectants (``forms``),
* points/lines of the projective plane encoded by quadratics (``plane``),
* the forward map from six conic parameters to all sixty Pascal lines,
  with the Steiner and Kirkman concurrency checks (``hexagram``),
* reconstruction of the labelled sextuple from four special Pascals
  (``reconstruction``),
* symbolic expansion proofs of every identity the reconstruction rests
  on (``identities``),
* an SVG renderer and a small JSON-speaking CLI (``svgfig``, ``cli``).
"""

from .errors import (
    BothZero,
    ChartDegenerate,
    CoincidentLines,
    CoincidentPoints,
    DegenerateConfiguration,
    DegeneratePencil,
    EmptyCoefficients,
    Inconsistent,
    InvalidLabels,
    MissingAssignment,
    NotDivisible,
    OrderOutOfRange,
    PascalError,
    RankDeficient,
    ReconstructionFailure,
    RoundTripFailed,
    VanishingPhi,
    ViewportExcludesAll,
    ZeroDenominator,
)
from .forms import BinaryForm, cayley_form, divide_exact, multiply, proportional, transvectant
from .hexagram import (
    KIRKMAN_TRIPLE,
    LABELS,
    SPECIAL_ARRAYS,
    STEINER_TRIPLE,
    PascalArray,
    PascalLine,
    SextupleParams,
    all_arrays,
    all_sixty,
    canonical_array,
    crosshair_points,
    four_special_pascals,
    kirkman_concurrent,
    line_coords,
    parse_array_code,
    pascal_line,
    random_sextuple,
    steiner_concurrent,
    to_json_records,
)
from .multipoly import MultiPoly
from .plane import (
    LINE,
    POINT,
    ProjQuadratic,
    conic_point,
    incident,
    join,
    line,
    meet,
    on_conic,
    point,
    polar,
)
from .rationals import format_rational, parse_rational, rational
from .reconstruction import (
    ChordTriple,
    ReconstructionResult,
    line_from_coords,
    psi,
    q_point_forms,
    reconstruct,
    reconstruct_from_coords,
    solve_parameter,
    stage1_chords,
    stage2_M_N,
)

__version__ = "0.1.0"

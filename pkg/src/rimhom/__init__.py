"""Homological invariants of rank-1 Cohen-Macaulay modules over circle algebras."""

from .ext import (
    DimensionTable,
    ExtDecomposition,
    VanishingWitness,
    even_offset,
    even_offset_remark_min,
    even_offset_table,
    ext,
    ext1,
    ext1_dimension_table,
    ext2_vanishes,
    ext_even,
    ext_odd,
)
from .render import RenderConfig, render_svg
from .resolution import (
    NotTwoPeakError,
    PeriodResult,
    PresentationMatrixD,
    ProjectiveCover,
    ProjectiveModuleError,
    build_D,
    period_closed_form,
    period_iterative,
    projective_cover,
    syzygy_rim_even,
    syzygy_rim_two_peak,
)
from .rims import (
    CyclicEdgeInterval,
    HeightProfile,
    Rim,
    SegmentDecomposition,
    all_rims,
    decompose,
    height_profile,
    is_interval,
    is_noncrossing,
    peak_count,
    peaks,
    shift,
    valleys,
)
from .snf import (
    BoxOffsets,
    EmptyInputError,
    InvariantFactorList,
    MalformedMatrixError,
    MonomialMatrix,
    NonMonomialFactorError,
    TooLargeError,
    box_merge_invariants,
    invariant_factors,
    reduce_units,
    snf_oracle,
)
from .trapezia import (
    KernelRelationError,
    MismatchedParametersError,
    TrapeziumLetter,
    TrapeziumWord,
    build_Dstar,
    build_word,
    canonical_hom_offset,
    kernel_coefficients,
)

__version__ = "0.1.0"

__all__ = [
    "BoxOffsets",
    "CyclicEdgeInterval",
    "DimensionTable",
    "EmptyInputError",
    "ExtDecomposition",
    "HeightProfile",
    "InvariantFactorList",
    "KernelRelationError",
    "MalformedMatrixError",
    "MismatchedParametersError",
    "MonomialMatrix",
    "NonMonomialFactorError",
    "NotTwoPeakError",
    "PeriodResult",
    "PresentationMatrixD",
    "ProjectiveCover",
    "ProjectiveModuleError",
    "RenderConfig",
    "Rim",
    "SegmentDecomposition",
    "TooLargeError",
    "TrapeziumLetter",
    "TrapeziumWord",
    "VanishingWitness",
    "all_rims",
    "box_merge_invariants",
    "build_D",
    "build_Dstar",
    "build_word",
    "canonical_hom_offset",
    "decompose",
    "even_offset",
    "even_offset_remark_min",
    "even_offset_table",
    "ext",
    "ext1",
    "ext1_dimension_table",
    "ext2_vanishes",
    "ext_even",
    "ext_odd",
    "height_profile",
    "invariant_factors",
    "is_interval",
    "is_noncrossing",
    "kernel_coefficients",
    "peak_count",
    "peaks",
    "period_closed_form",
    "period_iterative",
    "projective_cover",
    "reduce_units",
    "render_svg",
    "shift",
    "snf_oracle",
    "syzygy_rim_even",
    "syzygy_rim_two_peak",
    "valleys",
]

"""Numerical toolkit for the circle diffeomorphism group and its Moebius subgroup."""

from .circle import (
    CircleDiffeo,
    DiffeoMetrics,
    Support,
    compose,
    evaluate,
    from_displacement,
    identity,
    in_neighborhood,
    invert,
    make_diffeo,
    metrics,
    rotation,
    sup_distance,
    support,
)
from .cocycle import (
    SignSection,
    bott_cocycle,
    coboundary,
    cocycle_from_section,
    cocycle_identity_defect,
    cover_trivialize,
    sign_cocycle,
)
from .config import DEFAULT, Config
from .errors import (
    CircleGroupError,
    ConvergenceFailure,
    CoverageGap,
    Infeasible,
    ModeOverflow,
    NotADiffeomorphism,
    NotApplicable,
    NumericalError,
    OutsideNeighborhood,
    SlicingFailure,
    StepTooLarge,
    WordTooLong,
)
from .intervals import Covering, IntervalS1, uniform_covering
from .localization import (
    LocalizedWord,
    PartitionOfUnity,
    build_partition,
    epsilon_max,
    interpolation_path,
    localize,
    psi,
    slice_factorize,
    three_interval_cover,
)
from .moebius import (
    CoverElement,
    IwasawaCoords,
    MoebiusElement,
    TSFactor,
    act_on_circle,
    cover_compose,
    cover_identity,
    cover_make,
    cover_project,
    dilation_word,
    generator,
    iwasawa,
    rotation_word,
    to_diffeo,
    ts_word,
    word_matrix,
)
from .words import (
    default_step,
    moebius_word,
    small_generator_word,
    special_conformal_word,
    translation_word,
    word_product,
    word_stats,
)

__version__ = "0.1.0"

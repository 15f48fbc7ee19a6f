"""Geodesic counts between pairs of curves at distance two in the curve complex.

A pair of transverse simple closed curves on a punctured surface is stored as a
labeled 4-valent rotation system plus a table of complementary regions (see
:mod:`curve_spectra.ribbon`).  The engine reduces the pair to minimal position,
decides whether the curves are at distance one, two, or at least three, and
counts the geodesics and tight geodesics between them.
"""

from .analysis import (
    DistanceClass,
    classify_distance,
    cut_along,
    disjoint_curve_classes,
    find_bigons,
    intersection_number,
    is_filling,
    reduce,
    remove_bigon,
)
from .constructions import (
    DecompositionPlan,
    FillingPair,
    PieceKind,
    construct,
    filling_pair,
    finger_move,
    op_add_handle,
    op_add_punctured_handle,
    op_add_punctures,
    op_add_two_pants,
    plan_for_k,
    realize,
)
from .errors import (
    CertificationFailed,
    CurveSpectraError,
    InvalidConfiguration,
    NonOrientableOrInconsistent,
    NoPairFound,
    NotDistanceTwo,
    OutOfSpectrum,
    ParseError,
    PreconditionViolated,
    ReductionToDisjoint,
    SchemaError,
    SporadicSurface,
)
from .geodesics import GeodesicCount, TightCount, count_geodesics, count_tight_geodesics
from .ribbon import (
    ALPHA,
    BETA,
    BoundedType,
    Configuration,
    Region,
    SurfaceType,
    decode,
    encode,
    from_beta_sequence,
    regions_from_faces,
    relabel,
    surface_type,
    to_dot,
    validate,
)
from .search import (
    SpectrumReport,
    VerificationReport,
    canonical_form,
    empirical_spectrum,
    enumerate_configurations,
    naive_configurations,
    verify_theorems,
)
from .theory import spectrum_max, spectrum_table

__version__ = "0.1.0"

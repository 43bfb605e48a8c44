"""Planar cone-volume sets: geometry, classification, hull polytopes, oracles, solver."""

from .classify import (
    ClassificationResult,
    adjacent_set,
    classify,
    compute_u_delta,
    compute_u_square,
    hemisphere_witness,
    is_general_position,
    is_reducible,
    positively_spans,
)
from .geometry import (
    EPS_ANGLE,
    EPS_AREA,
    EPS_DET,
    EPS_SUM,
    EPS_UNIT,
    DiscreteMeasure,
    NormalSet,
    Polygon2D,
    cone_volume_vector,
    cone_volumes_batch,
    intersect_halfplanes,
    normalize_to_unit_area,
    polygon_area,
    transform_unimodular,
    validate_normals,
)
from .polytopes import (
    Halfspace,
    PolytopeRep,
    contains,
    enumerate_vertices,
    hull_halfspaces,
    hull_vertices,
    irredundant_facets,
    pscc_halfspaces,
    pscc_vertices,
    structure_predicates,
)
from .quad import (
    QuadLabeling,
    parallelogram_membership,
    quad_canonicalize,
    trapezoid_membership,
)
from .sampling import SampleBatch, empirical_hull_gap, sample_cone_volumes
from .solve import (
    MembershipVerdict,
    SolveOptions,
    SolveResult,
    decide_membership,
    solve,
    volume_gradient,
)
from .verify import VerifyReport, verify_suite

__all__ = [
    "ClassificationResult", "DiscreteMeasure", "Halfspace", "MembershipVerdict",
    "NormalSet", "Polygon2D", "PolytopeRep", "QuadLabeling", "SampleBatch",
    "SolveOptions", "SolveResult", "VerifyReport",
    "EPS_ANGLE", "EPS_AREA", "EPS_DET", "EPS_SUM", "EPS_UNIT",
    "adjacent_set", "classify", "compute_u_delta", "compute_u_square",
    "cone_volume_vector", "cone_volumes_batch", "contains", "decide_membership",
    "empirical_hull_gap", "enumerate_vertices", "hemisphere_witness",
    "hull_halfspaces", "hull_vertices", "intersect_halfplanes", "irredundant_facets",
    "is_general_position", "is_reducible", "normalize_to_unit_area",
    "parallelogram_membership", "polygon_area", "positively_spans",
    "pscc_halfspaces", "pscc_vertices", "quad_canonicalize",
    "sample_cone_volumes", "solve", "structure_predicates",
    "transform_unimodular", "trapezoid_membership", "validate_normals",
    "verify_suite", "volume_gradient",
]

__version__ = "0.1.0"

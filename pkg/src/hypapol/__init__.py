"""Hyperbolic geometry in the unit ball and upper half-space.

Distances, geodesic carriers, perpendicular bisectors, hyperbolic
midpoints and metric-ball conversions, all expressed through families
of circles orthogonal to the model boundary, plus verified Euclidean
lower bounds for the hyperbolic distance.
"""

from .apollonian import (
    ApollonianBall,
    ApollonianParameters,
    CircleBoundary,
    HalfPlaneBoundary,
    SphereBoundary,
    apollonian_boundary,
    apollonian_distance,
    apollonian_parameters,
)
from .bounds import (
    BoundEntry,
    BoundReport,
    ScalarBoundTriple,
    ball_lower_bounds,
    chord_bound,
    chord_family_report,
    circumscribed_bound,
    half_lower_bounds,
    midpoint_bound,
    scalar_sqrt_bounds,
    symmetric_chord_bound,
)
from .core import (
    INFINITY,
    ArcPath,
    Circle,
    CircleOrLine,
    Line,
    MobiusMap2,
    SegmentPath,
    WeightFunction,
    absolute_ratio,
    cross_ratio,
    disk_automorphism,
    is_infinity,
    mobius_apply,
    orthogonal_circle_through,
    path_length_quadrature,
    unit_sphere_inversion,
)
from .disk import (
    BisectionConstruction,
    ChordGeometry,
    EuclideanBallView,
    GeodesicSegment,
    ball_to_euclidean,
    bisect_construction,
    bisector_disk,
    chord_geometry,
    geodesic_disk,
    midpoint_disk,
    midpoint_origin_special,
    rho_ball,
    sphere_centered,
    sphere_to_apollonian,
)
from .errors import (
    ConvergenceError,
    DegenerateInput,
    DomainError,
    EmptyBoundary,
    GeometryError,
    NegativeDiscriminant,
)
from .halfplane import (
    ball_half_to_euclidean,
    ball_to_half_map,
    bisector_half,
    geodesic_half,
    half_to_ball_map,
    midpoint_half,
    rho_half,
)
from .render import (
    ConstructionScene,
    SceneArc,
    SceneCurve,
    ScenePoint,
    bisect_scene,
    empty_scene,
    half_midpoint_scene,
    render_svg,
    svg_document,
)
from .verify import SuiteResult, run_suite, run_verify, suite_names

__version__ = "0.1.0"

__all__ = [
    "ApollonianBall",
    "ApollonianParameters",
    "ArcPath",
    "BisectionConstruction",
    "BoundEntry",
    "BoundReport",
    "ChordGeometry",
    "Circle",
    "CircleBoundary",
    "CircleOrLine",
    "ConstructionScene",
    "ConvergenceError",
    "DegenerateInput",
    "DomainError",
    "EmptyBoundary",
    "EuclideanBallView",
    "GeodesicSegment",
    "GeometryError",
    "HalfPlaneBoundary",
    "INFINITY",
    "Line",
    "MobiusMap2",
    "NegativeDiscriminant",
    "ScalarBoundTriple",
    "SceneArc",
    "SceneCurve",
    "ScenePoint",
    "SegmentPath",
    "SphereBoundary",
    "SuiteResult",
    "WeightFunction",
    "absolute_ratio",
    "apollonian_boundary",
    "apollonian_distance",
    "apollonian_parameters",
    "ball_half_to_euclidean",
    "ball_lower_bounds",
    "ball_to_euclidean",
    "ball_to_half_map",
    "bisect_construction",
    "bisect_scene",
    "bisector_disk",
    "bisector_half",
    "chord_bound",
    "chord_family_report",
    "chord_geometry",
    "circumscribed_bound",
    "cross_ratio",
    "disk_automorphism",
    "empty_scene",
    "geodesic_disk",
    "geodesic_half",
    "half_lower_bounds",
    "half_midpoint_scene",
    "half_to_ball_map",
    "is_infinity",
    "midpoint_bound",
    "midpoint_disk",
    "midpoint_half",
    "midpoint_origin_special",
    "mobius_apply",
    "orthogonal_circle_through",
    "path_length_quadrature",
    "render_svg",
    "rho_ball",
    "rho_half",
    "run_suite",
    "run_verify",
    "scalar_sqrt_bounds",
    "sphere_centered",
    "sphere_to_apollonian",
    "suite_names",
    "svg_document",
    "symmetric_chord_bound",
    "unit_sphere_inversion",
]

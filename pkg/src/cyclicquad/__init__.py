"""Euclidean and hyperbolic geometry of quadrilaterals inscribed in the unit circle."""

from .errors import GeometryError
from .hyperbolic import (
    Geodesic,
    MobiusMap,
    ahlfors_bracket,
    geodesic_through,
    hyperbolic_distance,
    ideal_geodesic,
    t_a_map,
)
from .midpoint import five_points, gyromidpoint, hyperbolic_midpoint
from .normalize import CanonicalForm, lipschitz_cost, normalize_symmetric, normalize_zero_one_inf, symmetrize
from .plane import INF, Circle, cross_ratio, line_intersection
from .quadrilateral import OrderedQuadruple, QuadAnalysis, analyze

__all__ = [
    "INF",
    "CanonicalForm",
    "Circle",
    "Geodesic",
    "GeometryError",
    "MobiusMap",
    "OrderedQuadruple",
    "QuadAnalysis",
    "ahlfors_bracket",
    "analyze",
    "cross_ratio",
    "five_points",
    "geodesic_through",
    "gyromidpoint",
    "hyperbolic_distance",
    "hyperbolic_midpoint",
    "ideal_geodesic",
    "line_intersection",
    "lipschitz_cost",
    "normalize_symmetric",
    "normalize_zero_one_inf",
    "symmetrize",
    "t_a_map",
]

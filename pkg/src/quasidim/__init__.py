"""Exact weighted Ehrhart and difference dimension quasi-polynomials."""

from .exactnum import PeriodicRational, Rational
from .quasipoly import InterpolationError, QuasiPolynomial, interpolate
from .polytope import HPolytope, EmptyPolytopeError, UnboundedPolytopeError
from .latcount import (
    EnumerationCapExceeded,
    PointSet,
    WeightVector,
    count_polytope,
    count_simplex,
    count_VA,
    count_VA_recursive,
    ord_w,
)
from .ehrhart import ehrhart_polytope, lambda_w, vertices, volume
from .kolchin import (
    DimensionResult,
    SubsetExplosionError,
    dimension_quasipoly,
    dimension_single_point,
    exact_count_eval,
    minimal_antichain,
)
from .sigma import (
    CharacteristicSet,
    LinearSigmaPolynomial,
    Ranking,
    Term,
    characteristic_set,
    dimension_quasipoly_system,
    sigma_trdeg,
)

__version__ = "0.1.0"

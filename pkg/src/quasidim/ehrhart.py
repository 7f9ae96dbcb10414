"""Ehrhart quasi-polynomials by exact interpolation of brute-force counts."""

from functools import lru_cache
from math import lcm

from .latcount import DEFAULT_CAP, count_polytope, count_simplex, _weights
from .polytope import (
    HPolytope,
    affine_dimension,
    denominator,
    vertices,
    volume,
)
from .quasipoly import interpolate

__all__ = [
    "HPolytope",
    "MAX_DIMENSION",
    "ehrhart_polytope",
    "lambda_w",
    "vertices",
    "volume",
]

MAX_DIMENSION = 4


def lambda_w(w):
    """Counting quasi-polynomial of the weighted simplex ``{x >= 0, w.x <= t}``.

    Degree ``m`` with leading coefficient ``1/(m! w_1...w_m)``; period
    divides ``lcm(w)``.

    >>> print(lambda_w((2, 1)))
    (1/4) t^2 + t + [1, 3/4]_t
    """
    return _lambda_cached(_weights(w))


@lru_cache(maxsize=None)
def _lambda_cached(w):
    return interpolate(lambda t: count_simplex(w, t, cap=None), len(w), lcm(*w), 0)


def ehrhart_polytope(P, cap=DEFAULT_CAP):
    """Ehrhart quasi-polynomial ``r -> #(rP ∩ Z^d)`` of a bounded rational polytope.

    The period hypothesis is the vertex denominator of ``P``.  Polytopes that
    are not full-dimensional are still counted; their degree is then lower.
    """
    d = P.dimension
    if d > MAX_DIMENSION:
        raise ValueError(f"dimension {d} exceeds the supported maximum {MAX_DIMENSION}")
    verts = vertices(P)
    q = denominator(verts)
    return interpolate(lambda r: count_polytope(P, r, cap=cap, verts=verts), d, q, 0)


def polytope_report(P, cap=DEFAULT_CAP):
    """Everything the CLI prints about ``P``: L(P, .), vertices, D(P), volume."""
    verts = vertices(P)
    L = ehrhart_polytope(P, cap=cap)
    return {
        "ehrhart": L,
        "vertices": verts,
        "denominator": denominator(verts),
        "volume": volume(P, verts),
        "full_dimensional": affine_dimension(verts) == P.dimension,
    }

"""Dimension quasi-polynomials of subsets of N^m under a weighted order.

For a finite antichain ``A = {a_1, ..., a_d}`` the counting function of
``V_A`` (points above no element of ``A``) is the alternating sum, over all
subsets ``eps`` of ``A``, of the simplex quasi-polynomial shifted by the
weighted order of the coordinatewise maximum of ``eps``.
"""

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations

from .ehrhart import lambda_w
from .latcount import PointSet, _weights, dominates, ord_w
from .quasipoly import QuasiPolynomial

MAX_ANTICHAIN = 20


class SubsetExplosionError(RuntimeError):
    """Antichain too large for 2^d inclusion-exclusion."""


@dataclass(frozen=True)
class DimensionResult:
    chi: QuasiPolynomial
    threshold: int
    antichain: PointSet


def _as_pointset(A, m=None):
    if isinstance(A, PointSet):
        return A
    pts = tuple(tuple(p) for p in A)
    if m is None:
        if not pts:
            raise ValueError("cannot infer the dimension of an empty point list")
        m = len(pts[0])
    return PointSet(m, pts)


def minimal_antichain(A, m=None):
    """The <=_P-minimal elements of ``A``."""
    A = _as_pointset(A, m)
    pts = A.points
    keep = [p for p in pts if not any(q != p and dominates(q, p) for q in pts)]
    return PointSet(A.m, keep)


def _join(points):
    return tuple(max(c) for c in zip(*points))


def shift_multiplicities(A, w):
    """``{shift: signed multiplicity}`` of the inclusion-exclusion terms."""
    w = _weights(w)
    pts = A.points
    if len(pts) > MAX_ANTICHAIN:
        raise SubsetExplosionError(
            f"antichain has {len(pts)} points; 2^{len(pts)} subsets exceeds the guard (d <= {MAX_ANTICHAIN})"
        )
    mult = defaultdict(int)
    mult[0] += 1
    for size in range(1, len(pts) + 1):
        sign = -1 if size % 2 else 1
        for eps in combinations(pts, size):
            mult[ord_w(_join(eps), w)] += sign
    return {s: c for s, c in sorted(mult.items()) if c}


def dimension_quasipoly(A, w):
    """Dimension quasi-polynomial of ``A`` with threshold and minimal antichain.

    >>> res = dimension_quasipoly([(2, 1), (0, 3)], (2, 1))
    >>> print(res.chi, res.threshold)
    (1/2) t + [5, 9/2]_t 7
    """
    w = _weights(w)
    A = _as_pointset(A, len(w))
    if A.m != len(w):
        raise ValueError(f"point set lives in N^{A.m} but there are {len(w)} weights")
    anti = minimal_antichain(A)
    lam = lambda_w(w)
    pts = anti.points
    # the join of the whole antichain has the largest order of any subset
    threshold = ord_w(_join(pts), w) if pts else 0
    chi = QuasiPolynomial.zero()
    for s, c in shift_multiplicities(anti, w).items():
        chi = chi + lam.shift(s).scale(c)
    return DimensionResult(chi, threshold, anti)


def dimension_single_point(e, w):
    """``lambda_w(t) - lambda_w(t - ord_w e)``."""
    lam = lambda_w(w)
    return lam - lam.shift(ord_w(e, w))


def exact_count_eval(res, w, r):
    """Exact ``Card V_A(r)`` for every r >= 0.

    Same alternating sum as the quasi-polynomial, but each shifted simplex
    term with negative argument contributes zero instead of its polynomial
    continuation.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    w = _weights(w)
    lam = lambda_w(w)
    total = 0
    for s, c in shift_multiplicities(res.antichain, w).items():
        if r - s >= 0:
            total += c * lam(r - s)
    return int(total)

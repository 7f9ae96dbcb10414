"""Brute-force lattice-point counters.

These are deliberately naive: they serve as back-ends for interpolation
and as independent oracles for the inclusion-exclusion formulas.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import prod

from .polytope import bounding_box, vertices

DEFAULT_CAP = 10**8


class EnumerationCapExceeded(RuntimeError):
    """Enumeration box would exceed the configured point cap."""


@dataclass(frozen=True)
class WeightVector:
    weights: tuple

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        if not w:
            raise ValueError("weight vector must be nonempty")
        if any(x < 1 for x in w):
            raise ValueError("weights must be positive integers")
        object.__setattr__(self, "weights", w)

    @property
    def m(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __len__(self):
        return len(self.weights)


@dataclass(frozen=True)
class PointSet:
    """Finite subset of N^m; duplicates are dropped, points kept sorted."""

    m: int
    points: tuple = ()

    def __post_init__(self):
        pts = sorted({tuple(int(c) for c in p) for p in self.points})
        if self.m < 1:
            raise ValueError("dimension must be positive")
        for p in pts:
            if len(p) != self.m:
                raise ValueError(f"point {p} does not have {self.m} coordinates")
            if any(c < 0 for c in p):
                raise ValueError(f"point {p} has a negative coordinate")
        object.__setattr__(self, "points", tuple(pts))

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    @classmethod
    def from_json(cls, data):
        return cls(int(data["m"]), tuple(tuple(p) for p in data["points"]))

    def to_json(self):
        return {"m": self.m, "points": [list(p) for p in self.points]}


def _weights(w):
    return tuple(w.weights) if isinstance(w, WeightVector) else tuple(int(x) for x in w)


def _points(A):
    return tuple(tuple(p) for p in A)


def ord_w(a, w):
    w = _weights(w)
    if len(a) != len(w):
        raise ValueError(f"point {tuple(a)} and weights {w} differ in dimension")
    return sum(wi * ai for wi, ai in zip(w, a))


def _simplex_box(w, t):
    return prod(t // wi + 1 for wi in w)


def _check_cap(size, cap):
    if cap is not None and size > cap:
        raise EnumerationCapExceeded(f"enumeration box has {size} points, cap is {cap}")


def count_simplex(w, t, cap=DEFAULT_CAP):
    """Card{x in N^m : sum w_i x_i <= t}."""
    w = _weights(w)
    if t < 0:
        return 0
    _check_cap(_simplex_box(w, t), cap)

    def rec(j, budget):
        if j == len(w) - 1:
            return budget // w[j] + 1
        return sum(rec(j + 1, budget - w[j] * x) for x in range(budget // w[j] + 1))

    return rec(0, t)


def simplex_points(w, t):
    """Generate every x in N^m with ord_w(x) <= t."""
    w = _weights(w)
    if t < 0:
        return

    def rec(j, budget, prefix):
        if j == len(w):
            yield prefix
            return
        for x in range(budget // w[j] + 1):
            yield from rec(j + 1, budget - w[j] * x, prefix + (x,))

    yield from rec(0, t, ())


def count_polytope(P, r, cap=DEFAULT_CAP, verts=None):
    """Number of integer points in the r-th dilate of ``P``.

    The integer bounding box of ``rP`` comes from exact vertices; the last
    coordinate is resolved as an interval instead of scanned.
    """
    if r < 0:
        raise ValueError("dilation factor must be nonnegative")
    verts = vertices(P) if verts is None else verts
    box = bounding_box(P, r, verts)
    if any(lo > hi for lo, hi in box):
        return 0
    _check_cap(prod(hi - lo + 1 for lo, hi in box), cap)
    d = P.dimension
    rows = [(row, r * bi) for row, bi in zip(P.A, P.b)]

    def rec(j, prefix):
        if j == d - 1:
            lo, hi = box[j]
            for row, rhs in rows:
                a = row[j]
                slack = rhs - sum(c * x for c, x in zip(row, prefix))
                if a > 0:
                    hi = min(hi, slack // a)
                elif a < 0:
                    lo = max(lo, -(slack // -a))
                elif slack < 0:
                    return 0
            return max(0, hi - lo + 1)
        lo, hi = box[j]
        return sum(rec(j + 1, prefix + (x,)) for x in range(lo, hi + 1))

    return rec(0, ())


def dominates(a, v):
    """``a <=_P v`` in the product order."""
    return all(ai <= vi for ai, vi in zip(a, v))


def count_VA(A, w, r, cap=DEFAULT_CAP):
    """Card of points v with ord_w(v) <= r not above any element of ``A``."""
    w = _weights(w)
    A = _points(A)
    for a in A:
        if len(a) != len(w):
            raise ValueError("point set and weights differ in dimension")
    if r < 0:
        return 0
    _check_cap(_simplex_box(w, r), cap)
    return sum(1 for v in simplex_points(w, r) if not any(dominates(a, v) for a in A))


def count_VA_recursive(A, w, r):
    """Same count as :func:`count_VA` via the last-coordinate recursion

    ``N_A(s) = N_{A0}(s) + N_{A1}(s - w_m)``.
    """
    w = _weights(w)
    A = frozenset(_points(A))
    for a in A:
        if len(a) != len(w):
            raise ValueError("point set and weights differ in dimension")
    return _n_rec(A, w, r)


@lru_cache(maxsize=None)
def _n_rec(A, w, s):
    if s < 0:
        return 0
    m = len(w)
    if (0,) * m in A:
        return 0
    if not A:
        return count_simplex(w, s, cap=None)
    if m == 1:
        k = min(a[0] for a in A)
        return min(k - 1, s // w[0]) + 1
    A0 = frozenset(a[:-1] for a in A if a[-1] == 0)
    A1 = frozenset(
        [a[:-1] + (a[-1] - 1,) for a in A if a[-1] >= 1]
        + [a[:-1] + (0,) for a in A if a[-1] == 0]
    )
    return _n_rec(A0, w[:-1], s) + _n_rec(A1, w, s - w[-1])

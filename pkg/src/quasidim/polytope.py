"""Rational H-polytopes: exact vertex enumeration, bounds and volume."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial, floor, ceil, lcm

from .linalg import SingularMatrixError, det, kernel_vector, rank, solve


class UnboundedPolytopeError(ValueError):
    pass


class EmptyPolytopeError(ValueError):
    pass


@dataclass(frozen=True)
class HPolytope:
    """``{x in R^d : A x <= b}`` with integer data."""

    A: tuple
    b: tuple

    def __post_init__(self):
        A = tuple(tuple(int(a) for a in row) for row in self.A)
        b = tuple(int(x) for x in self.b)
        if not A:
            raise ValueError("polytope needs at least one inequality")
        d = len(A[0])
        if d < 1 or any(len(row) != d for row in A):
            raise ValueError("all rows of A must have the same positive length")
        if len(b) != len(A):
            raise ValueError("A and b have different numbers of rows")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)

    @property
    def dimension(self):
        return len(self.A[0])

    def contains(self, x, r=1):
        """Whether ``x`` lies in the r-th dilate."""
        return all(sum(a * xi for a, xi in zip(row, x)) <= r * bi for row, bi in zip(self.A, self.b))

    @classmethod
    def from_json(cls, data):
        return cls(data["A"], data["b"])

    def to_json(self):
        return {"A": [list(r) for r in self.A], "b": list(self.b)}

    @classmethod
    def simplex(cls, weights, t=1):
        """``{x >= 0, sum w_i x_i <= t}``."""
        m = len(weights)
        rows = [tuple(-1 if j == i else 0 for j in range(m)) for i in range(m)]
        rows.append(tuple(weights))
        return cls(tuple(rows), (0,) * m + (t,))


def check_bounded(P):
    """Raise :class:`UnboundedPolytopeError` if ``{A y <= 0}`` has a nonzero ray."""
    d = P.dimension
    if rank(P.A) < d:
        raise UnboundedPolytopeError("inequalities leave a line of recession")
    # pointed recession cone: any nonzero cone has an extreme ray, cut out by d-1 rows
    for rows in combinations(P.A, d - 1):
        if d > 1 and rank(rows) != d - 1:
            continue
        y = kernel_vector(list(rows), d) if d > 1 else [Fraction(1)]
        for ray in (y, [-v for v in y]):
            if all(sum(a * v for a, v in zip(row, ray)) <= 0 for row in P.A):
                raise UnboundedPolytopeError(f"recession direction {[str(v) for v in ray]}")


def vertices(P):
    """All vertices of ``P`` as tuples of Fractions, sorted.

    Every d-subset of rows with an invertible submatrix is solved; feasible
    solutions are kept and deduplicated.
    """
    check_bounded(P)
    d = P.dimension
    found = set()
    for idx in combinations(range(len(P.A)), d):
        A = [P.A[i] for i in idx]
        try:
            x = solve(A, [P.b[i] for i in idx])
        except SingularMatrixError:
            continue
        if P.contains(x):
            found.add(tuple(x))
    if not found:
        raise EmptyPolytopeError("polytope has no points")
    return sorted(found)


def denominator(verts):
    """Least n such that n times every vertex is integral."""
    return lcm(*(c.denominator for v in verts for c in v))


def affine_dimension(verts):
    v0 = verts[0]
    diffs = [[a - b for a, b in zip(v, v0)] for v in verts[1:]]
    return rank(diffs) if diffs else 0


def is_full_dimensional(P, verts=None):
    verts = vertices(P) if verts is None else verts
    return affine_dimension(verts) == P.dimension


def bounding_box(P, r=1, verts=None):
    """Integer coordinate ranges ``[(lo, hi), ...]`` covering the r-th dilate."""
    verts = vertices(P) if verts is None else verts
    box = []
    for j in range(P.dimension):
        coords = [v[j] * r for v in verts]
        box.append((ceil(min(coords)), floor(max(coords))))
    return box


def _tight(P, v):
    return frozenset(i for i, (row, bi) in enumerate(zip(P.A, P.b)) if sum(a * x for a, x in zip(row, v)) == bi)


def triangulate(P, verts=None):
    """Simplices (tuples of vertices) of a pulling triangulation of ``P``.

    Each face is coned from its smallest vertex over the facets of that face
    that miss it.  Faces are vertex sets; a face's facets are the maximal
    subsets tight on one extra inequality.
    """
    verts = vertices(P) if verts is None else verts
    tight = {v: _tight(P, v) for v in verts}

    def facets(face, k):
        out = set()
        for i in range(len(P.A)):
            sub = frozenset(v for v in face if i in tight[v])
            if sub and sub != face and affine_dimension(sorted(sub)) == k - 1:
                out.add(sub)
        return out

    def tri(face, k):
        if k == 0:
            return [(min(face),)]
        apex = min(face)
        simplices = []
        for F in sorted(facets(face, k), key=sorted):
            if apex in F:
                continue
            simplices.extend((apex,) + s for s in tri(F, k - 1))
        return simplices

    face = frozenset(verts)
    return tri(face, affine_dimension(verts))


def volume(P, verts=None):
    """Exact Euclidean volume; zero for lower-dimensional polytopes."""
    verts = vertices(P) if verts is None else verts
    d = P.dimension
    if affine_dimension(verts) < d:
        return Fraction(0)
    total = Fraction(0)
    for s in triangulate(P, verts):
        v0 = s[0]
        total += abs(det([[a - b for a, b in zip(v, v0)] for v in s[1:]]))
    return total / factorial(d)

import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from quasidim import HPolytope
from quasidim.kolchin import minimal_antichain
from quasidim.latcount import (
    EnumerationCapExceeded,
    PointSet,
    WeightVector,
    count_polytope,
    count_simplex,
    count_VA,
    count_VA_recursive,
    ord_w,
)
from quasidim.polytope import UnboundedPolytopeError


def brute_VA(A, w, r):
    """Scan the full box [0, r]^m; shares nothing with the library enumerator."""
    m = len(w)
    n = 0
    for v in product(range(r + 1), repeat=m):
        if sum(a * b for a, b in zip(w, v)) > r:
            continue
        if any(all(ai <= vi for ai, vi in zip(a, v)) for a in A):
            continue
        n += 1
    return n


def test_ord_w():
    assert ord_w((2, 1), (2, 1)) == 5
    assert ord_w((0, 0, 0), (3, 1, 4)) == 0
    assert ord_w((2, 3), (2, 1)) == 7
    with pytest.raises(ValueError):
        ord_w((1, 2, 3), (1, 1))


def test_weight_vector_validation():
    assert WeightVector([2, 1]).m == 2
    with pytest.raises(ValueError):
        WeightVector([])
    with pytest.raises(ValueError):
        WeightVector([1, 0])


def test_pointset_validation():
    A = PointSet(2, ((2, 1), (0, 3), (2, 1)))
    assert A.points == ((0, 3), (2, 1))
    assert PointSet.from_json(A.to_json()) == A
    with pytest.raises(ValueError):
        PointSet(2, ((1, 2, 3),))
    with pytest.raises(ValueError):
        PointSet(2, ((-1, 2),))


def test_count_simplex():
    assert count_simplex((2, 1), 2) == 4
    assert count_simplex((3, 5, 7), 0) == 1
    assert count_simplex((1, 1), 3) == 10
    assert count_simplex((2, 1), -1) == 0
    assert [count_simplex((2, 1), t) for t in range(4)] == [1, 2, 4, 6]


def test_count_polytope(trapezoid):
    assert count_polytope(trapezoid, 2) == 27
    assert count_polytope(trapezoid, 0) == 1
    assert count_polytope(trapezoid, 4) == 88


def test_count_polytope_matches_membership_scan(trapezoid):
    for r in range(6):
        scan = sum(trapezoid.contains((x, y), r) for x in range(-1, 5 * r + 2) for y in range(-1, 3 * r + 2))
        assert count_polytope(trapezoid, r) == scan


def test_count_polytope_guards():
    line = HPolytope(((-1, 0), (1, 0)), (0, 1))
    with pytest.raises(UnboundedPolytopeError):
        count_polytope(line, 1)
    box = HPolytope(((-1, 0), (0, -1), (1, 0), (0, 1)), (0, 0, 1, 1))
    with pytest.raises(EnumerationCapExceeded):
        count_polytope(box, 100, cap=1000)
    with pytest.raises(EnumerationCapExceeded):
        count_simplex((1, 1), 100, cap=1000)


def test_count_VA():
    assert count_VA([(2, 1), (0, 3)], (2, 1), 7) == 8
    assert count_VA([], (2, 1), 2) == 4
    assert count_VA([(0, 0)], (1, 3), 9) == 0


def test_count_VA_recursive():
    assert count_VA_recursive([(2, 1), (0, 3)], (2, 1), 7) == 8
    assert count_VA_recursive([], (3,), 7) == 3
    assert count_VA_recursive([(1, 1)], (1, 1), 4) == 9
    assert count_VA_recursive([(2,)], (1,), -3) == 0


def test_recursive_equals_enumeration_exhaustive():
    # every A of at most two points in [0,5]^m for m = 1, 2; sampled for m = 3
    rng = random.Random(5)
    grid2 = list(product(range(6), repeat=2))
    cases = [([(a,)], (w,)) for a in range(6) for w in (1, 2, 3)]
    cases += [([p, q], w) for p in grid2[::3] for q in grid2[::4] for w in [(1, 1), (2, 1), (1, 3)]]
    for _ in range(120):
        w = tuple(rng.randint(1, 4) for _ in range(3))
        A = [tuple(rng.randint(0, 5) for _ in range(3)) for _ in range(rng.randint(0, 3))]
        cases.append((A, w))
    for A, w in cases:
        for r in range(0, 41, 3):
            assert count_VA_recursive(A, w, r) == count_VA(A, w, r), (A, w, r)


def test_enumerator_against_box_scan():
    for A, w in [([(2, 1), (0, 3)], (2, 1)), ([(1, 2, 0), (0, 0, 2)], (1, 2, 1)), ([], (3, 2))]:
        for r in range(12):
            assert count_VA(A, w, r) == brute_VA(A, w, r)


points3 = st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)), max_size=4)


@settings(max_examples=60, deadline=None)
@given(points3, st.tuples(st.integers(1, 4), st.integers(1, 4)), st.integers(0, 30))
def test_antichain_invariance(A, w, r):
    anti = minimal_antichain(A, 2)
    assert count_VA(A, w, r) == count_VA(anti.points, w, r)


@settings(max_examples=60, deadline=None)
@given(points3, points3, st.tuples(st.integers(1, 4), st.integers(1, 4)), st.integers(0, 30))
def test_monotone_in_generators(A, extra, w, r):
    # B = A + extra generates a larger up-set, so fewer points avoid it
    B = A + extra
    assert count_VA(A, w, r) >= count_VA(B, w, r)


@given(st.lists(st.integers(1, 4), min_size=1, max_size=3), st.integers(0, 12))
def test_simplex_monotone_and_matches_polytope(w, t):
    assert count_simplex(w, t) <= count_simplex(w, t + 1)
    assert count_simplex(w, t) == count_polytope(HPolytope.simplex(w, t), 1)

"""Dimension quasi-polynomials of subsets of N^m.

For A in N^m, V_A is the set of points above no element of A.  Counting its
points of weighted order <= r gives a quasi-polynomial for large r, built
from shifted simplex quasi-polynomials by inclusion-exclusion.
"""
from quasidim import count_VA, count_VA_recursive, dimension_quasipoly, exact_count_eval

A, w = [(2, 1), (0, 3)], (2, 1)
res = dimension_quasipoly(A, w)
print("chi(t) =", res.chi, f"(valid for t >= {res.threshold})")

# %% Three independent ways to count, plus the quasi-polynomial itself
print(" r  enum  recur  trunc  chi(r)")
for r in range(12):
    print(f"{r:2d}  {count_VA(A, w, r):4d}  {count_VA_recursive(A, w, r):5d}  "
          f"{exact_count_eval(res, w, r):5d}  {str(res.chi(r)):>6}")

# %% Non-minimal generators do not change anything
res2 = dimension_quasipoly(A + [(3, 1), (2, 5)], w)
print("antichain:", res2.antichain.points, "| same chi:", res2.chi == res.chi)

# %% The empty set gives the simplex count; the origin kills everything
print(dimension_quasipoly([], w).chi, "|", dimension_quasipoly([(0, 0)], w).chi)

"""Ehrhart quasi-polynomials of rational polytopes.

The counts of lattice points in dilates of a rational polytope are a
quasi-polynomial whose leading coefficient is the volume.  We build it from
brute-force counts and check it against the volume computed independently.
"""
from quasidim import HPolytope, count_polytope, ehrhart_polytope, lambda_w
from quasidim.polytope import denominator, vertices, volume

# %% The trapezoid x, y >= 0, x + y <= 3, 2x <= 5
P = HPolytope(((-1, 0), (0, -1), (1, 1), (2, 0)), (0, 0, 3, 5))
verts = vertices(P)
print("vertices:", [tuple(str(c) for c in v) for v in verts])
print("denominator:", denominator(verts))
print("counts r=0..4:", [count_polytope(P, r) for r in range(5)])

# %% Its Ehrhart quasi-polynomial; the t^2 coefficient is the area 35/8
L = ehrhart_polytope(P)
print("L(P, t) =", L)
print("area    =", volume(P))

# %% Weighted simplices {x >= 0, w.x <= t}
for w in [(1,), (2, 1), (1, 1, 1), (3, 2)]:
    print(w, "->", lambda_w(w))

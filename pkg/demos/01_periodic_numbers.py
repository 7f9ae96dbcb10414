"""Periodic numbers and quasi-polynomials.

A periodic number is a function on the integers that only depends on the
residue of its argument; a quasi-polynomial is a polynomial whose
coefficients are periodic numbers.  Everything below is exact.
"""
from quasidim import PeriodicRational, QuasiPolynomial, interpolate

# %% A period-3 number, and a redundant period-4 one that collapses to period 2
u = PeriodicRational(["1/2", "3/4", 1])
print(u.format(), "->", [str(u(n)) for n in range(6)])
print(PeriodicRational([2, 5, 2, 5]))

# %% Arithmetic is pointwise, results come back with the minimal period
print((PeriodicRational([1]) + PeriodicRational([0, 1])).format())
print((PeriodicRational([1, "3/4"]) - PeriodicRational([1, "3/4"])).format())

# %% A quasi-polynomial and its translates
f = QuasiPolynomial([[1, "3/4"], 1, "1/4"])
print("f(t)     =", f)
print("f(t - 3) =", f.shift(3))
print("values   :", [str(f(t)) for t in range(8)])

# %% Interpolation recovers f from samples once degree and period are known
g = interpolate(lambda n: f(n), degree_bound=2, period=2, base=0)
print("recovered:", g, "| equal:", g == f)

# %% JSON form
print(f.to_json())

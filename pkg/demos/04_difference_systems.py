"""Linear difference systems with weighted translations.

Two translations a1, a2 with weights 2 and 1 act on one unknown y.  The
characteristic set of the system determines leader exponent sets E_j whose
dimension quasi-polynomials add up to the system's dimension
quasi-polynomial; its t^m coefficient gives the difference transcendence
degree.
"""
from quasidim import (
    LinearSigmaPolynomial,
    Ranking,
    Term,
    characteristic_set,
    dimension_quasipoly_system,
    sigma_trdeg,
)

w = (2, 1)
rk = Ranking(w, n=1)


def show(F):
    cs = characteristic_set(F, rk)
    for f in cs.elements:
        print("   ", f.format(rk))
    phi = dimension_quasipoly_system(cs.leader_sets, w)
    print("    E:", cs.leader_sets[0].points)
    print("    Phi:", phi, "| sigma-trdeg:", sigma_trdeg(phi, w))


# %% Monomial equations a1^2 a2 y = 0, a2^3 y = 0
print("monomial system")
show([LinearSigmaPolynomial([(Term((2, 1)), 1)]), LinearSigmaPolynomial([(Term((0, 3)), 1)])])

# %% Same leaders with lower-order tails: completion finds the new leader a1^2 y
print("system with tails")
show([
    LinearSigmaPolynomial([(Term((2, 1)), 1), (Term((1, 0)), -1)]),
    LinearSigmaPolynomial([(Term((0, 3)), 1), (Term((0, 0)), -1)]),
])

# %% Two unknowns, one equation: one free generator survives
rk = Ranking(w, n=2)
print("one equation in two unknowns")
f = LinearSigmaPolynomial([(Term((1, 0), 1), 1), (Term((0, 1), 0), 2)])
cs = characteristic_set([f], rk)
phi = dimension_quasipoly_system(cs.leader_sets, w)
print("    Phi:", phi, "| sigma-trdeg:", sigma_trdeg(phi, w))

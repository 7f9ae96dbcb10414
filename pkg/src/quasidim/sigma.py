"""Linear difference polynomials with weighted translations.

The coefficient field is Q with every translation acting as the identity,
so a linear homogeneous difference polynomial in ``y_0, ..., y_{n-1}`` is
an element of the free module of rank n over ``Q[x_1, ..., x_m]``: the term
``alpha_1^k_1 ... alpha_m^k_m y_j`` is the module monomial ``x^k e_j``.
The ranking (weighted order, then exponents lexicographically, then the
indeterminate index) is a module term order, so characteristic sets of
linear systems are reduced Groebner bases under it.
"""

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod

from .exactnum import as_rational, format_rational
from .kolchin import dimension_quasipoly
from .latcount import PointSet, _weights
from .quasipoly import QuasiPolynomial


@dataclass(frozen=True, order=True)
class Term:
    """``tau y_j`` with ``tau = alpha^exps``; ``ind`` is 0-based."""

    exps: tuple
    ind: int = 0

    def __post_init__(self):
        object.__setattr__(self, "exps", tuple(int(k) for k in self.exps))
        if any(k < 0 for k in self.exps):
            raise ValueError("exponents must be nonnegative")
        if self.ind < 0:
            raise ValueError("indeterminate index must be nonnegative")

    def translate(self, tau):
        return Term(tuple(a + b for a, b in zip(self.exps, tau)), self.ind)

    def divides(self, other):
        """Whether ``other`` is a transform of ``self``."""
        return self.ind == other.ind and all(a <= b for a, b in zip(self.exps, other.exps))

    def __str__(self):
        parts = []
        for i, k in enumerate(self.exps, start=1):
            if k == 1:
                parts.append(f"a{i}")
            elif k:
                parts.append(f"a{i}^{k}")
        parts.append(f"y{self.ind}")
        return "*".join(parts)


@dataclass(frozen=True)
class Ranking:
    weights: tuple
    n: int = 1

    def __post_init__(self):
        object.__setattr__(self, "weights", _weights(self.weights))

    @property
    def m(self):
        return len(self.weights)

    def order(self, term):
        return sum(w * k for w, k in zip(self.weights, term.exps))

    def key(self, term):
        if len(term.exps) != self.m:
            raise ValueError(f"term {term} has {len(term.exps)} exponents, ranking expects {self.m}")
        if term.ind >= self.n:
            raise ValueError(f"term {term} refers to y{term.ind} but n = {self.n}")
        return (self.order(term),) + term.exps + (term.ind,)


def term_compare(u, v, rk):
    """-1, 0 or 1 as ``u`` ranks below, equal to or above ``v``."""
    ku, kv = rk.key(u), rk.key(v)
    return (ku > kv) - (ku < kv)


class LinearSigmaPolynomial:
    """Finite Q-combination of terms; immutable, zero coefficients dropped."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        acc = {}
        for t, c in items:
            t = t if isinstance(t, Term) else Term(*t)
            acc[t] = acc.get(t, Fraction(0)) + as_rational(c)
        self._terms = {t: c for t, c in acc.items() if c}

    @property
    def terms(self):
        return dict(self._terms)

    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, LinearSigmaPolynomial):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        out = dict(self._terms)
        for t, c in other._terms.items():
            out[t] = out.get(t, 0) + c
        return LinearSigmaPolynomial(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = as_rational(c)
        return LinearSigmaPolynomial({t: v * c for t, v in self._terms.items()})

    def translate(self, tau):
        return LinearSigmaPolynomial({t.translate(tau): c for t, c in self._terms.items()})

    def sorted_terms(self, rk):
        """Terms from highest to lowest rank."""
        return sorted(self._terms, key=rk.key, reverse=True)

    def format(self, rk=None):
        if not self._terms:
            return "0"
        ts = self.sorted_terms(rk) if rk else sorted(self._terms, reverse=True)
        out = []
        for t in ts:
            c = self._terms[t]
            mag = "" if abs(c) == 1 else f"{format_rational(abs(c))}*"
            sign = "-" if c < 0 else "+"
            out.append((sign, f"{mag}{t}"))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        return s + "".join(f" {sg} {body}" for sg, body in out[1:])

    def __repr__(self):
        return f"LinearSigmaPolynomial({self.format()!r})"

    def to_json(self):
        return {
            "terms": [
                {"coef": format_rational(c), "exps": list(t.exps), "ind": t.ind}
                for t, c in sorted(self._terms.items())
            ]
        }

    @classmethod
    def from_json(cls, data):
        return cls([(Term(tuple(e["exps"]), int(e.get("ind", 0))), as_rational(e["coef"])) for e in data["terms"]])


def leader(f, rk):
    if f.is_zero():
        raise ValueError("the zero polynomial has no leader")
    return max(f._terms, key=rk.key)


def initial(f, rk):
    return f._terms[leader(f, rk)]


def apply_translation(tau, f):
    return f.translate(tau)


def _monic(f, rk):
    return f.scale(1 / initial(f, rk))


def reduce(f, S, rk):
    """Remainder of ``f`` on division by ``S``: no term is a transform of a leader.

    The highest-ranked reducible term is eliminated first, so the process
    terminates; the initials are nonzero scalars, hence no multiplier on
    ``f`` is needed.
    """
    divisors = []
    for g in S:
        if g.is_zero():
            raise ValueError("cannot reduce by the zero polynomial")
        divisors.append((leader(g, rk), _monic(g, rk)))
    terms = dict(f._terms)
    while True:
        step = None
        for t in sorted(terms, key=rk.key, reverse=True):
            for u, g in divisors:
                if u.divides(t):
                    step = (t, u, g)
                    break
            if step:
                break
        if step is None:
            return LinearSigmaPolynomial(terms)
        t, u, g = step
        tau = tuple(a - b for a, b in zip(t.exps, u.exps))
        c = terms[t]
        for s, v in g._terms.items():
            s = s.translate(tau)
            nv = terms.get(s, 0) - c * v
            if nv:
                terms[s] = nv
            else:
                terms.pop(s, None)


def is_reduced(f, S, rk):
    leaders = [leader(g, rk) for g in S]
    return not any(u.divides(t) for t in f._terms for u in leaders)


def is_autoreduced(S, rk):
    return all(is_reduced(f, S[:i] + S[i + 1 :], rk) for i, f in enumerate(S))


@dataclass(frozen=True)
class CharacteristicSet:
    elements: tuple
    leader_sets: tuple
    ranking: Ranking

    def leaders(self):
        return [leader(f, self.ranking) for f in self.elements]


def _lcm_term(u, v):
    return Term(tuple(max(a, b) for a, b in zip(u.exps, v.exps)), u.ind)


def characteristic_set(F, rk):
    """Characteristic set of the difference ideal generated by linear ``F``.

    Critical-pair completion over the module ranking, followed by
    inter-reduction.  Pairs are only formed between elements whose leaders
    involve the same indeterminate and are processed in increasing rank of
    their common transform.
    """
    basis = []
    for f in F:
        if f.is_zero():
            raise ValueError("input polynomials must be nonzero")
        for t in f._terms:
            rk.key(t)
        basis.append(_monic(f, rk))

    queue = []
    counter = 0

    def push_pairs(k):
        nonlocal counter
        uk = leader(basis[k], rk)
        for i in range(k):
            ui = leader(basis[i], rk)
            if ui.ind == uk.ind:
                heapq.heappush(queue, (rk.key(_lcm_term(ui, uk)), counter, i, k))
                counter += 1

    for k in range(len(basis)):
        push_pairs(k)
    while queue:
        _, _, i, k = heapq.heappop(queue)
        f, g = basis[i], basis[k]
        uf, ug = leader(f, rk), leader(g, rk)
        lc = _lcm_term(uf, ug)
        s = f.translate(tuple(a - b for a, b in zip(lc.exps, uf.exps))) - g.translate(
            tuple(a - b for a, b in zip(lc.exps, ug.exps))
        )
        h = reduce(s, basis, rk)
        if not h.is_zero():
            basis.append(_monic(h, rk))
            push_pairs(len(basis) - 1)

    return _interreduce(basis, rk)


def _interreduce(basis, rk):
    # among equal leaders keep fewer monomials, then the earlier element
    order = sorted(range(len(basis)), key=lambda i: (rk.key(leader(basis[i], rk)), len(basis[i]), i))
    minimal = []
    for i in order:
        u = leader(basis[i], rk)
        if not any(leader(g, rk).divides(u) for g in minimal):
            minimal.append(basis[i])
    out = []
    for i, g in enumerate(minimal):
        h = reduce(g, minimal[:i] + minimal[i + 1 :], rk)
        out.append(_monic(h, rk))
    out.sort(key=lambda f: rk.key(leader(f, rk)))
    sets = []
    for j in range(rk.n):
        pts = [leader(f, rk).exps for f in out if leader(f, rk).ind == j]
        sets.append(PointSet(rk.m, tuple(pts)))
    return CharacteristicSet(tuple(out), tuple(sets), rk)


def _leader_point_sets(E, m):
    out = []
    for Ej in E:
        out.append(Ej if isinstance(Ej, PointSet) else PointSet(m, tuple(tuple(p) for p in Ej)))
    return out


def dimension_quasipoly_system(E, w):
    """Difference dimension quasi-polynomial: sum of the chi of every E_j."""
    w = _weights(w)
    phi = QuasiPolynomial.zero()
    for Ej in _leader_point_sets(E, len(w)):
        if Ej.m != len(w):
            raise ValueError("leader set dimension differs from the number of weights")
        phi = phi + dimension_quasipoly(Ej, w).chi
    return phi


def system_threshold(E, w):
    """Argument from which Φ agrees with the transcendence degree count."""
    w = _weights(w)
    return max((dimension_quasipoly(Ej, w).threshold for Ej in _leader_point_sets(E, len(w))), default=0)


def sigma_trdeg(phi, w):
    """Difference transcendence degree read off the t^m coefficient of Φ."""
    w = _weights(w)
    m = len(w)
    if phi.degree > m:
        raise ValueError(f"degree {phi.degree} exceeds m = {m}")
    if phi.degree < m or phi.is_zero():
        return 0
    c = phi.leading_coefficient()
    if not c.is_constant():
        raise ArithmeticError(f"t^{m} coefficient {c.format('t')} is not constant")
    a = c.values[0] * factorial(m) * prod(w)
    if a.denominator != 1 or a < 0:
        raise ArithmeticError(f"t^{m} coefficient gives non-integral degree {a}")
    return int(a)

"""Univariate quasi-polynomials with rational periodic coefficients."""

from fractions import Fraction
from math import comb, lcm

from .exactnum import PeriodicRational, as_rational, format_rational
from .linalg import SingularMatrixError, solve


class InterpolationError(ValueError):
    """The counter is not a quasi-polynomial of the claimed degree/period."""


_ZERO = PeriodicRational([0])


def _as_periodic(c):
    if isinstance(c, PeriodicRational):
        return c
    if isinstance(c, (list, tuple)):
        return PeriodicRational(c)
    return PeriodicRational([c])


class QuasiPolynomial:
    """``f(t) = c_d(t) t^d + ... + c_0(t)``, canonical and immutable.

    ``coefficients[i]`` multiplies ``t**i``.  Plain numbers and lists are
    accepted as coefficients and converted to periodic numbers.

    >>> f = QuasiPolynomial([[1, "3/4"], 1, "1/4"])
    >>> f(3)
    Fraction(6, 1)
    >>> print(f)
    (1/4) t^2 + t + [1, 3/4]_t
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients=()):
        cs = [_as_periodic(c) for c in coefficients]
        while cs and cs[-1].is_zero():
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def polynomial(cls, coefficients):
        return cls([PeriodicRational([c]) for c in coefficients])

    @property
    def coefficients(self):
        """Coefficients c_0, ..., c_d; the zero polynomial has ``(0,)``."""
        return self._coeffs or (_ZERO,)

    @property
    def degree(self):
        return max(len(self._coeffs) - 1, 0)

    @property
    def period(self):
        return lcm(*(c.period for c in self.coefficients))

    def is_zero(self):
        return not self._coeffs

    def leading_coefficient(self):
        return self.coefficients[-1]

    def __call__(self, n):
        # Horner with the periodic coefficients frozen at n
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * n + c(n)
        return acc

    def __add__(self, other):
        if not isinstance(other, QuasiPolynomial):
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        k = max(len(a), len(b))
        return QuasiPolynomial(
            [(a[i] if i < len(a) else _ZERO) + (b[i] if i < len(b) else _ZERO) for i in range(k)]
        )

    def __neg__(self):
        return QuasiPolynomial([-c for c in self._coeffs])

    def __sub__(self, other):
        if not isinstance(other, QuasiPolynomial):
            return NotImplemented
        return self + (-other)

    def scale(self, r):
        r = as_rational(r)
        return QuasiPolynomial([c * r for c in self._coeffs])

    def __mul__(self, r):
        if isinstance(r, (int, Fraction)):
            return self.scale(r)
        return NotImplemented

    __rmul__ = __mul__

    def shift(self, s):
        """Quasi-polynomial ``g`` with ``g(n) = f(n - s)``."""
        if s == 0:
            return self
        out = [_ZERO] * len(self._coeffs)
        for i, c in enumerate(self._coeffs):
            c = c.shift(s)
            for k in range(i + 1):
                factor = comb(i, k) * (-s) ** (i - k)
                if factor:
                    out[k] = out[k] + c * factor
        return QuasiPolynomial(out)

    def __eq__(self, other):
        if isinstance(other, QuasiPolynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"QuasiPolynomial({self.format()!r})"

    def __str__(self):
        return self.format()

    def format(self, var="t"):
        """Highest degree first, periodic coefficients in bracket notation."""
        if self.is_zero():
            return "0"
        parts = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if c.is_zero():
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if c.is_constant():
                v = c.values[0]
                sign = "-" if v < 0 else "+"
                v = abs(v)
                if mono and v == 1:
                    body = mono
                else:
                    num = format_rational(v)
                    if v.denominator != 1 and mono:
                        num = f"({num})"
                    body = f"{num} {mono}" if mono else num
            else:
                sign = "+"
                body = c.format(var) + (f" {mono}" if mono else "")
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def to_json(self):
        return {
            "degree": self.degree,
            "period": self.period,
            "coefficients": [c.to_json() for c in self.coefficients],
        }

    @classmethod
    def from_json(cls, data):
        coeffs = [PeriodicRational.from_json(c) for c in data["coefficients"]]
        f = cls(coeffs)
        if "degree" in data and data["degree"] != f.degree:
            raise ValueError("degree field disagrees with coefficients")
        if "period" in data and data["period"] != f.period:
            raise ValueError("period field disagrees with coefficients")
        return f


def qp_eval(f, n):
    return f(n)


def qp_arith(f, g, op):
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    raise ValueError(f"unknown operation {op!r}")


def qp_scale(f, r):
    return f.scale(r)


def qp_shift(f, s):
    if s < 0:
        raise ValueError("shift must be nonnegative")
    return f.shift(s)


def qp_degree(f):
    return f.degree


def qp_leading_coefficient(f):
    return f.leading_coefficient()


def qp_format(f):
    return f.format()


def interpolate(counter, degree_bound, period, base=0):
    """Recover the quasi-polynomial agreeing with ``counter`` for n >= base.

    For every residue class modulo ``period`` the counter is sampled at the
    ``degree_bound + 1`` smallest admissible arguments and the Vandermonde
    system is solved exactly.  The result is then checked against extra
    samples up to ``base + (degree_bound + 2) * period``; a mismatch raises
    :class:`InterpolationError`.
    """
    m, q, s0 = degree_bound, period, base
    if m < 0 or q < 1:
        raise ValueError("need degree_bound >= 0 and period >= 1")
    cache = {}

    def sample(n):
        if n not in cache:
            cache[n] = counter(n)
        return cache[n]

    table = [[Fraction(0)] * q for _ in range(m + 1)]
    for c in range(q):
        first = s0 + (c - s0) % q
        pts = [first + k * q for k in range(m + 1)]
        A = [[p**i for i in range(m + 1)] for p in pts]
        try:
            sol = solve(A, [sample(p) for p in pts])
        except SingularMatrixError as exc:  # distinct nodes: cannot happen
            raise RuntimeError("internal error: singular Vandermonde system") from exc
        for i in range(m + 1):
            table[i][c] = sol[i]
    g = QuasiPolynomial([PeriodicRational(row) for row in table])
    for n in range(s0, s0 + (m + 2) * q + 1):
        if g(n) != sample(n):
            raise InterpolationError(
                f"period/degree hypothesis violated: fitted value {g(n)} != count {sample(n)} at n={n}"
            )
    return g


qp_interpolate = interpolate

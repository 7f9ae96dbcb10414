"""Exact rational scalars and rational periodic numbers.

Scalars are plain :class:`fractions.Fraction` values.  A periodic number
``[a_0, ..., a_{q-1}]_n`` is a function Z -> Q whose value at ``n`` is
``a_{n mod q}``; it is always stored with its minimal period.
"""

from fractions import Fraction
from math import gcd

Rational = Fraction


def as_rational(x):
    """Coerce an int, Fraction or fraction string ("35/8", "-2") to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if "." in s or "e" in s.lower():
            raise ValueError(f"decimal notation not accepted: {x!r}")
        return Fraction(s)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def format_rational(x):
    """Reduced fraction string, e.g. '35/8', '-2'."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _lcm(a, b):
    return a * b // gcd(a, b)


def _divisors(q):
    return [d for d in range(1, q + 1) if q % d == 0]


class PeriodicRational:
    """Immutable rational periodic number in minimal-period form.

    >>> PeriodicRational([2, 5, 2, 5])
    PeriodicRational([2, 5])
    >>> PeriodicRational(["1/2", "3/4", 1])(4)
    Fraction(3, 4)
    """

    __slots__ = ("_values",)

    def __init__(self, values):
        vals = tuple(as_rational(v) for v in values)
        if not vals:
            raise ValueError("a periodic number needs at least one value")
        self._values = _minimal(vals)

    @classmethod
    def constant(cls, c):
        return cls([c])

    @property
    def values(self):
        return self._values

    @property
    def period(self):
        return len(self._values)

    def __call__(self, n):
        return self._values[n % len(self._values)]

    def is_zero(self):
        return all(v == 0 for v in self._values)

    def is_constant(self):
        return len(self._values) == 1

    def _binop(self, other, fn):
        if not isinstance(other, PeriodicRational):
            other = PeriodicRational.constant(other)
        q = _lcm(self.period, other.period)
        return PeriodicRational([fn(self(k), other(k)) for k in range(q)])

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binop(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._binop(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __neg__(self):
        return PeriodicRational([-v for v in self._values])

    def shift(self, s):
        """Periodic number ``n -> self(n - s)``."""
        return PeriodicRational([self(k - s) for k in range(self.period)])

    def __eq__(self, other):
        if isinstance(other, PeriodicRational):
            return self._values == other._values
        if isinstance(other, (int, Fraction)):
            return self._values == (Fraction(other),)
        return NotImplemented

    def __hash__(self):
        return hash(self._values)

    def __repr__(self):
        inner = ", ".join(format_rational(v) for v in self._values)
        return f"PeriodicRational([{inner}])"

    def format(self, var="n"):
        """Bracket notation; constants print as a bare fraction."""
        if self.is_constant():
            return format_rational(self._values[0])
        inner = ", ".join(format_rational(v) for v in self._values)
        return f"[{inner}]_{var}"

    def to_json(self):
        return [format_rational(v) for v in self._values]

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, list):
            raise ValueError("periodic number JSON must be a list of fraction strings")
        return cls(data)


def _minimal(vals):
    q = len(vals)
    for d in _divisors(q):
        if all(vals[k] == vals[k % d] for k in range(d, q)):
            return vals[:d]
    return vals


def pr_normalize(p):
    """Minimal-period representative (values are kept canonical on construction)."""
    return PeriodicRational(p.values)


def pr_arith(a, b, op):
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def pr_eval(p, n):
    return p(n)

"""Exact coefficient fields.

Coefficients are stored as plain Python values: :class:`fractions.Fraction`
over Q and ``int`` in ``[0, p)`` over GF(p). A field object knows how to
create, combine and print them.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ContextError

MAX_MODULUS = 2**63


class RationalField:
    """The rationals, with arbitrary precision."""

    name = "q"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, value) -> Fraction:
        return Fraction(value)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("q")

    def __repr__(self):
        return "QQ"

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero in Q")
        return 1 / a

    def div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero in Q")
        return a / b

    def format(self, a) -> str:
        return str(a)

    def descriptor(self) -> str:
        return "q"


class PrimeField:
    """Integers modulo a prime ``p < 2**63``."""

    def __init__(self, p: int):
        from sympy import isprime

        p = int(p)
        if p < 2 or p >= MAX_MODULUS or not isprime(p):
            raise ValueError(f"modulus {p} is not a prime below 2^63")
        self.p = p
        self.characteristic = p
        self.name = f"gf {p}"
        self.zero = 0
        self.one = 1

    def __call__(self, value) -> int:
        if isinstance(value, Fraction):
            return self.div(value.numerator % self.p, value.denominator % self.p)
        return int(value) % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("gf", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if not a % self.p:
            raise ZeroDivisionError(f"inverse of zero in GF({self.p})")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def format(self, a) -> str:
        # symmetric representative reads better: -1 rather than p-1
        return str(a - self.p if a > self.p // 2 else a)

    def descriptor(self) -> str:
        return f"gf {self.p}"


QQ = RationalField()


def field_from_descriptor(text: str):
    """Parse ``q`` / ``gf <p>`` (``gf:<p>`` and ``gf<p>`` are accepted too)."""
    s = text.strip().lower()
    if s in ("q", "qq"):
        return QQ
    if s.startswith("gf"):
        rest = s[2:].lstrip(": ").strip()
        if not rest.isdigit():
            raise ValueError(f"bad field descriptor {text!r}")
        return PrimeField(int(rest))
    raise ValueError(f"unknown field {text!r}; expected 'q' or 'gf <p>'")


def check_same_field(a, b):
    if a != b:
        raise ContextError(f"field mismatch: {a!r} vs {b!r}")

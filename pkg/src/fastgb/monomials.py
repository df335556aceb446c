"""Monomials as exponent tuples, and the three global monomial orders.

A monomial is a plain ``tuple`` of non-negative ints, one per variable. The
constant monomial is the all-zero tuple. Division returns ``None`` when the
divisor does not divide; that is an ordinary outcome, not an error.
"""

from __future__ import annotations

from functools import lru_cache
from operator import add, sub
from typing import Optional, Tuple

from .errors import ContextError

Monomial = Tuple[int, ...]

ORDER_KINDS = ("lex", "grlex", "grevlex")


def _check(a, b):
    if len(a) != len(b):
        raise ContextError(f"monomials over {len(a)} and {len(b)} variables")


def degree(a: Monomial) -> int:
    return sum(a)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    _check(a, b)
    return tuple(map(add, a, b))


def mono_divides(b: Monomial, a: Monomial) -> bool:
    """True iff ``b`` divides ``a``."""
    _check(a, b)
    for x, y in zip(b, a):
        if x > y:
            return False
    return True


def mono_div(a: Monomial, b: Monomial) -> Optional[Monomial]:
    """``a / b`` if ``b`` divides ``a``, else ``None``."""
    _check(a, b)
    q = tuple(map(sub, a, b))
    for e in q:
        if e < 0:
            return None
    return q


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    _check(a, b)
    return tuple(map(max, a, b))


def one(n: int) -> Monomial:
    return (0,) * n


class MonomialOrder:
    """A global monomial order on monomials in ``nvars`` variables.

    Variables are ranked by position: ``x_1 > x_2 > ... > x_n``. Each order is
    realised as a sort key, and every key is additive in the exponents, so
    ``key(a*c) - key(b*c) == key(a) - key(b)``; multiplicativity follows.
    """

    def __init__(self, kind: str, nvars: int):
        if kind not in ORDER_KINDS:
            raise ValueError(f"unknown monomial order {kind!r}; expected one of {ORDER_KINDS}")
        if nvars < 1:
            raise ValueError("need at least one variable")
        self.kind = kind
        self.nvars = nvars
        if kind == "lex":
            self.key = _lex_key
        elif kind == "grlex":
            self.key = lru_cache(maxsize=1 << 16)(_grlex_key)
        else:
            self.key = lru_cache(maxsize=1 << 16)(_grevlex_key)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (self.kind, self.nvars) == (other.kind, other.nvars)

    def __hash__(self):
        return hash((self.kind, self.nvars))

    def __repr__(self):
        return f"MonomialOrder({self.kind!r}, {self.nvars})"

    def cmp(self, a: Monomial, b: Monomial) -> int:
        """-1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
        _check(a, b)
        if len(a) != self.nvars:
            raise ContextError(f"order is over {self.nvars} variables, monomial has {len(a)}")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def lt(self, a: Monomial, b: Monomial) -> bool:
        return self.cmp(a, b) < 0

    def max(self, *monos: Monomial) -> Monomial:
        return max(monos, key=self.key)


def _lex_key(m):
    return m


def _grlex_key(m):
    return (sum(m),) + m


def _grevlex_key(m):
    # higher degree wins; on ties, the smaller exponent in the last variable wins
    return (sum(m),) + tuple(-e for e in reversed(m))

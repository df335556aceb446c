"""Sparse multivariate polynomials over an exact field.

A :class:`Polynomial` keeps its terms as ``(monomial, coefficient)`` pairs
sorted strictly descending under the ring's monomial order, with no zero
coefficients. Instances are immutable; every operation returns a new one in
canonical form.
"""

from __future__ import annotations

import math
from fractions import Fraction
from operator import add as _add
from typing import Dict, Iterable, List, Sequence, Tuple

from .counter import active_counter
from .errors import ContextError, NoHeadTermError
from .fields import QQ, check_same_field
from .monomials import Monomial, MonomialOrder


class PolyRing:
    """Variables, monomial order and coefficient field shared by one computation.

    Polynomials from different rings never mix: arithmetic between them
    raises :class:`ContextError`.
    """

    def __init__(self, variables: Sequence[str], order: str = "grevlex", field=QQ):
        variables = tuple(variables)
        if not variables:
            raise ValueError("a ring needs at least one variable")
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        self.variables = variables
        self.nvars = len(variables)
        self.order = MonomialOrder(order, self.nvars)
        self.field = field
        self._zero = Polynomial._raw(self, ())

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.variables == other.variables
                and self.order == other.order and self.field == other.field)

    def __hash__(self):
        return hash((self.variables, self.order, self.field))

    def __repr__(self):
        return f"PolyRing({list(self.variables)}, {self.order.kind!r}, {self.field!r})"

    @property
    def counter(self):
        return active_counter()

    def with_order(self, order: str) -> "PolyRing":
        return PolyRing(self.variables, order, self.field)

    @property
    def one_monomial(self) -> Monomial:
        return (0,) * self.nvars

    def zero(self) -> "Polynomial":
        return self._zero

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        return self.monomial(self.one_monomial, c)

    def monomial(self, m: Monomial, c=1) -> "Polynomial":
        m = tuple(m)
        if len(m) != self.nvars:
            raise ContextError(f"monomial {m} does not have {self.nvars} exponents")
        c = self.field(c)
        return Polynomial._raw(self, ((m, c),) if c else ())

    def var(self, name: str) -> "Polynomial":
        try:
            i = self.variables.index(name)
        except ValueError:
            raise ValueError(f"unknown variable {name!r}") from None
        m = [0] * self.nvars
        m[i] = 1
        return self.monomial(tuple(m))

    def gens(self) -> List["Polynomial"]:
        return [self.var(v) for v in self.variables]

    def from_terms(self, terms: Iterable[Tuple[Monomial, object]]) -> "Polynomial":
        """Build a polynomial from arbitrary ``(monomial, coeff)`` pairs; duplicates are summed."""
        F = self.field
        d: Dict[Monomial, object] = {}
        for m, c in terms:
            m = tuple(m)
            if len(m) != self.nvars or any(e < 0 for e in m):
                raise ContextError(f"bad exponent vector {m} for {self.nvars} variables")
            d[m] = F.add(d[m], F(c)) if m in d else F(c)
        return Polynomial._from_dict(self, d)

    def from_dict(self, d: Dict[Monomial, object]) -> "Polynomial":
        return self.from_terms(d.items())

    def format_monomial(self, m: Monomial) -> str:
        parts = []
        for v, e in zip(self.variables, m):
            if e == 1:
                parts.append(v)
            elif e:
                parts.append(f"{v}^{e}")
        return "*".join(parts) if parts else "1"


class Polynomial:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Iterable[Tuple[Monomial, object]] = ()):
        canon = ring.from_terms(terms)
        self.ring = ring
        self.terms = canon.terms
        self._hash = None

    @classmethod
    def _raw(cls, ring, terms):
        p = object.__new__(cls)
        p.ring = ring
        p.terms = tuple(terms)
        p._hash = None
        return p

    @classmethod
    def _from_dict(cls, ring, d):
        key = ring.order.key
        items = sorted(((m, c) for m, c in d.items() if c), key=lambda t: key(t[0]), reverse=True)
        return cls._raw(ring, items)

    # -- inspection ------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def head(self) -> Tuple[object, Monomial]:
        """``(HC, HT)``: the leading coefficient and monomial."""
        if not self.terms:
            raise NoHeadTermError("the zero polynomial has no head term")
        m, c = self.terms[0]
        return c, m

    @property
    def ht(self) -> Monomial:
        if not self.terms:
            raise NoHeadTermError("the zero polynomial has no head term")
        return self.terms[0][0]

    @property
    def hc(self):
        if not self.terms:
            raise NoHeadTermError("the zero polynomial has no head term")
        return self.terms[0][1]

    def second_monomial(self):
        """The largest non-leading monomial, or ``None`` for monomials (and zero)."""
        return self.terms[1][0] if len(self.terms) > 1 else None

    def monomials(self) -> List[Monomial]:
        return [m for m, _ in self.terms]

    def coefficient(self, m: Monomial):
        for mm, c in self.terms:
            if mm == m:
                return c
        return self.ring.field.zero

    def total_degree(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return max(sum(m) for m, _ in self.terms)

    def tail(self) -> "Polynomial":
        return Polynomial._raw(self.ring, self.terms[1:])

    def is_canonical(self) -> bool:
        key = self.ring.order.key
        n = self.ring.nvars
        for i, (m, c) in enumerate(self.terms):
            if not c or len(m) != n:
                return False
            if i and not key(self.terms[i - 1][0]) > key(m):
                return False
        return True

    # -- arithmetic --------------------------------------------------------

    def _check_ring(self, other: "Polynomial"):
        if other.ring is not self.ring and other.ring != self.ring:
            if other.ring.field != self.ring.field:
                check_same_field(self.ring.field, other.ring.field)
            raise ContextError(f"polynomials from different rings: {self.ring!r} vs {other.ring!r}")

    def add_scaled(self, c, u: Monomial, f: "Polynomial") -> "Polynomial":
        """``self + c * u * f``; the single primitive behind reduction and S-polynomials."""
        self._check_ring(f)
        ring = self.ring
        if len(u) != ring.nvars:
            raise ContextError(f"shift monomial {u} does not have {ring.nvars} exponents")
        F = ring.field
        c = F(c)
        if not c or not f.terms:
            return self
        fadd, fmul = F.add, F.mul
        d = dict(self.terms)
        shift = any(u)
        merged = 0
        for m, a in f.terms:
            if shift:
                m = tuple(map(_add, u, m))
            b = fmul(c, a)
            old = d.get(m)
            if old is None:
                d[m] = b
            else:
                merged += 1
                s = fadd(old, b)
                if s:
                    d[m] = s
                else:
                    del d[m]
        active_counter().field(len(f.terms) + merged)
        return Polynomial._from_dict(ring, d)

    def mul_term(self, c, u: Monomial) -> "Polynomial":
        """``c * u * self``."""
        return self.ring.zero().add_scaled(c, u, self)

    def scale(self, c) -> "Polynomial":
        return self.mul_term(c, self.ring.one_monomial)

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        F = self.ring.field
        return self.scale(F.inv(self.hc))

    def __neg__(self):
        F = self.ring.field
        return Polynomial._raw(self.ring, tuple((m, F.neg(c)) for m, c in self.terms))

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check_ring(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.add_scaled(self.ring.field.one, self.ring.one_monomial, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.ring.field
        return self.add_scaled(F.neg(F.one), self.ring.one_monomial, other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        acc = self.ring.zero()
        for m, c in other.terms:
            acc = acc.add_scaled(c, m, self)
        return acc

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        acc = self.ring.one()
        for _ in range(e):
            acc = acc * self
        return acc

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == self.ring.constant(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        ring = self.ring
        F = ring.field
        out = []
        for m, c in self.terms:
            s = F.format(c)
            neg = s.startswith("-")
            if neg:
                s = s[1:]
            if any(m):
                mono = ring.format_monomial(m)
                s = mono if s == "1" else f"{s}*{mono}"
            out.append(("- " if neg else "+ ") + s)
        text = " ".join(out)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def count_monomials(D: int, n: int) -> int:
    """Number of monomials of total degree at most ``D`` in ``n`` variables."""
    if D < 0 or n < 1:
        raise ValueError(f"count_monomials needs D >= 0 and n >= 1, got D={D}, n={n}")
    return math.comb(n + D, n)


def degree_bound(F: Sequence[Polynomial]) -> int:
    """Upper bound on the degree of any polynomial arising in a basis computation.

    ``(8 * maxdeg + 1) * 2**mindeg`` over the total degrees of the inputs.
    """
    if not F:
        raise ValueError("degree_bound of an empty system")
    if any(not f for f in F):
        raise ValueError("degree_bound: zero polynomial in the system")
    degs = [f.total_degree() for f in F]
    return (8 * max(degs) + 1) * 2 ** min(degs)

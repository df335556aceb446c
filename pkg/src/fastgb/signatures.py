"""Signatures, signed polynomials and critical pairs.

Signatures ``u*e_i`` are compared position-over-term: the generator index
decides first (a larger index is a larger signature), then the monomial under
the ring's order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from operator import add

from .monomials import Monomial, MonomialOrder
from .polynomial import Polynomial

_births = itertools.count(1)


@dataclass(frozen=True)
class Signature:
    index: int
    monomial: Monomial

    def shifted(self, u: Monomial) -> "Signature":
        return Signature(self.index, tuple(map(add, self.monomial, u)))

    def format(self, ring) -> str:
        return f"{ring.format_monomial(self.monomial)}*e{self.index}"


class SignatureOrder:
    def __init__(self, order: MonomialOrder):
        self.order = order

    def key(self, s: Signature):
        return (s.index, self.order.key(s.monomial))

    def cmp(self, a: Signature, b: Signature) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def lt(self, a: Signature, b: Signature) -> bool:
        return self.key(a) < self.key(b)

    def max(self, a: Signature, b: Signature) -> Signature:
        return a if self.key(a) >= self.key(b) else b


@dataclass(eq=False)
class SignedPolynomial:
    """A polynomial labelled with a signature and a creation stamp.

    Stamps come from one process-wide counter, so they are unique and
    increase in creation order.
    """

    signature: Signature
    poly: Polynomial
    birth: int = field(default_factory=lambda: next(_births))

    @property
    def index(self) -> int:
        return self.signature.index

    def __repr__(self):
        return f"({self.signature.format(self.poly.ring)}, {self.poly}) #{self.birth}"


@dataclass(eq=False)
class CriticalPair:
    """``[u, F, v, G]`` with ``lcm = u*HT(F) = v*HT(G)``."""

    lcm: Monomial
    u: Monomial
    F: SignedPolynomial
    v: Monomial
    G: SignedPolynomial

    @property
    def u_signature(self) -> Signature:
        return self.F.signature.shifted(self.u)

    @property
    def v_signature(self) -> Signature:
        return self.G.signature.shifted(self.v)

    def signature(self, sig_order: SignatureOrder) -> Signature:
        return sig_order.max(self.u_signature, self.v_signature)

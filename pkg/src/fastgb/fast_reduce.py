"""Reducer selection by smallest shifted second monomial.

Among the basis elements whose head divides ``HT(h)``, pick the ``f_k``
minimising ``u_k * t_k2``, where ``u_k = HT(h)/HT(f_k)`` and ``t_k2`` is the
second-largest monomial of ``f_k``. After the step ``h - u_k*f_k`` the new
head is ``max(second monomial of h, u_k*t_k2)``, so this keeps the head as low
as possible.
"""

from __future__ import annotations

from operator import add
from typing import Callable, List, Optional, Sequence

from . import checks
from .counter import active_counter
from .monomials import Monomial, mono_div
from .polynomial import Polynomial
from .signatures import SignatureOrder, SignedPolynomial

MODES = ("safe", "literal")

# A missing second monomial (single-term reducer) ranks below every monomial.
_ABSENT = (0,)


class ReducerTable:
    """Head and second monomial of every basis element, kept in basis order.

    Zero polynomials get ``None`` in both columns and never qualify as reducers.
    """

    def __init__(self):
        self.heads: List[Optional[Monomial]] = []
        self.seconds: List[Optional[Monomial]] = []
        self.polys: List[Polynomial] = []

    @classmethod
    def from_polys(cls, G: Sequence[Polynomial]) -> "ReducerTable":
        t = cls()
        for g in G:
            t.append(g)
        return t

    @classmethod
    def from_basis(cls, B: Sequence[SignedPolynomial]) -> "ReducerTable":
        return cls.from_polys([F.poly for F in B])

    def append(self, g: Polynomial):
        self.polys.append(g)
        self.heads.append(g.ht if g else None)
        self.seconds.append(g.second_monomial() if g else None)

    def __len__(self):
        return len(self.heads)


def shifted_second_key(order, u: Monomial, second: Optional[Monomial]):
    """Sort key of ``u * t_2``; the absent marker sorts below every monomial."""
    if second is None:
        return _ABSENT
    return (1, order.key(tuple(map(add, u, second))))


def reduction_sequence(h: Polynomial, G: Sequence[Polynomial], table: ReducerTable = None,
                       eligible: Callable[[int, Monomial], bool] = None) -> int:
    """1-based index of the reducer to use for ``h``, or 0 when none applies.

    Ties keep the first minimum. ``eligible(i, u)`` (0-based ``i``) can veto
    candidates before they compete.
    """
    if not h:
        raise ValueError("reduction_sequence of the zero polynomial")
    if table is None:
        table = ReducerTable.from_polys(G)
    order = h.ring.order
    t = h.ht
    best_index = 0
    best_key = (1, order.key(t))
    tested = 0
    for i in range(len(G)):
        head = table.heads[i]
        if head is None:
            continue
        tested += 1
        u = mono_div(t, head)
        if u is None:
            continue
        if eligible is not None and not eligible(i, u):
            continue
        k = shifted_second_key(order, u, table.seconds[i])
        if k < best_key:
            best_key = k
            best_index = i + 1
    active_counter().add("divisibility_tests", tested)
    return best_index


def s_poly_reduction(sp: SignedPolynomial, B: Sequence[SignedPolynomial], mode: str = "safe",
                     table: ReducerTable = None, sig_order: SignatureOrder = None) -> SignedPolynomial:
    """Top-reduce ``sp`` by ``B`` choosing reducers with :func:`reduction_sequence`.

    ``safe`` only admits reducers whose shifted signature is strictly below
    ``sign(sp)``, so the signature never changes. ``literal`` admits every
    divisor; a step whose reducer signature is not smaller gives the result
    that larger signature and is tallied as ``signature_drift``.
    """
    if mode not in MODES:
        raise ValueError(f"unknown reduction mode {mode!r}")
    if not sp.poly:
        return sp
    ring = sp.poly.ring
    order = ring.order
    if sig_order is None:
        sig_order = SignatureOrder(order)
    if table is None:
        table = ReducerTable.from_basis(B)
    else:
        for F in B[len(table):]:
            table.append(F.poly)
    G = table.polys
    fld = ring.field
    counter = active_counter()

    while sp.poly:
        h = sp.poly
        if mode == "safe":
            skey = sig_order.key(sp.signature)

            def eligible(i, u, skey=skey):
                return sig_order.key(B[i].signature.shifted(u)) < skey
        else:
            eligible = None
        k = reduction_sequence(h, G, table, eligible)
        if k == 0:
            return sp
        Fk = B[k - 1]
        f = Fk.poly
        u = mono_div(h.ht, f.ht)
        with counter.phase("reduction"):
            q = fld.div(h.hc, f.hc)
            counter.field(1)
            poly = h.add_scaled(fld.neg(q), u, f)
        counter.add("reduction_steps")
        sig = sp.signature
        if mode == "literal":
            shifted = Fk.signature.shifted(u)
            if not sig_order.lt(shifted, sig):
                counter.add("signature_drift")
                sig = sig_order.max(sig, shifted)
        if checks.enabled:
            _check_step(h, u, table.seconds[k - 1], poly, order)
        sp = SignedPolynomial(sig, poly)
    return sp


def _check_step(h, u, second, new, order):
    key = order.key
    if new:
        checks.require(key(new.ht) < key(h.ht), "heuristic step did not lower the head")
    h2 = h.second_monomial()
    cands = []
    if h2 is not None:
        cands.append(h2)
    if second is not None:
        cands.append(tuple(map(add, u, second)))
    if not cands:
        checks.require(not new, "single-term step left a remainder")
        return
    bound = max(cands, key=key)
    if new:
        checks.require(key(new.ht) <= key(bound), "new head exceeds max(h2, u*t2)")
        # equality holds unless the two candidates coincide and cancel
        if len(cands) == 1 or cands[0] != cands[1]:
            checks.require(new.ht == bound, "new head differs from max(h2, u*t2)")


def fast_strategy(F: Sequence[Polynomial], mode: str = "safe") -> List[Polynomial]:
    """F5B with :func:`s_poly_reduction` in place of F5-reduction."""
    from .f5b import f5b_basis

    return f5b_basis(F, strategy="fast", mode=mode)

"""F5B: the F5 algorithm in Buchberger's style.

Signed polynomials are reduced only by reducers of strictly smaller
signature, and critical pairs are filtered by the syzygy and rewritten
criteria before any S-polynomial is formed. The reduction step is
pluggable: ``strategy="f5"`` uses F5-reduction, ``strategy="fast"`` the
second-monomial heuristic of :mod:`fastgb.fast_reduce`.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

from . import checks
from .counter import active_counter
from .errors import SignatureCollisionError
from .monomials import mono_div, mono_divides, mono_lcm
from .polynomial import Polynomial
from .signatures import CriticalPair, Signature, SignatureOrder, SignedPolynomial

STRATEGIES = ("f5", "fast")
SELECTIONS = ("signature", "degree")


def make_critical_pair(F: SignedPolynomial, G: SignedPolynomial) -> CriticalPair:
    if not F.poly or not G.poly:
        raise ValueError("critical pair of a zero polynomial")
    t = mono_lcm(F.poly.ht, G.poly.ht)
    return CriticalPair(t, mono_div(t, F.poly.ht), F, mono_div(t, G.poly.ht), G)


def is_divisible(sig: Signature, B: Sequence[SignedPolynomial]) -> bool:
    """Syzygy test for one signature ``t*e_j``.

    True when some basis element of lower generator index has a head term
    dividing ``t``; the principal syzygies then supply a smaller
    representation.
    """
    active_counter().add("divisibility_tests", len(B))
    t = sig.monomial
    for g in B:
        if g.signature.index < sig.index and g.poly and mono_divides(g.poly.ht, t):
            return True
    return False


def is_rewritable(u, F: SignedPolynomial, B: Sequence[SignedPolynomial]) -> bool:
    """Rewritten test for ``u*F``: a later-born element of the same index whose signature divides."""
    sig = F.signature.shifted(u)
    active_counter().add("divisibility_tests", len(B))
    for H in B:
        # the pair's own members take part in the scan; a later-born member
        # may rewrite the other one (this is what removes equal-signature pairs)
        if (H.birth > F.birth and H.signature.index == sig.index
                and mono_divides(H.signature.monomial, sig.monomial)):
            return True
    return False


def syzygy_criterion(cp: CriticalPair, B: Sequence[SignedPolynomial]) -> bool:
    return is_divisible(cp.u_signature, B) or is_divisible(cp.v_signature, B)


def rewritten_criterion(cp: CriticalPair, B: Sequence[SignedPolynomial]) -> bool:
    return is_rewritable(cp.u, cp.F, B) or is_rewritable(cp.v, cp.G, B)


def spol_signed(cp: CriticalPair, sig_order: SignatureOrder = None) -> SignedPolynomial:
    """``HC(g)*u*F - HC(f)*v*G`` carrying the larger of the two shifted signatures."""
    f, g = cp.F.poly, cp.G.poly
    if sig_order is None:
        sig_order = SignatureOrder(f.ring.order)
    su, sv = cp.u_signature, cp.v_signature
    if su == sv:
        raise SignatureCollisionError(
            f"critical pair with equal signatures {su.format(f.ring)} reached spol")
    F = f.ring.field
    with active_counter().phase("spol"):
        poly = f.mul_term(g.hc, cp.u).add_scaled(F.neg(f.hc), cp.v, g)
    return SignedPolynomial(sig_order.max(su, sv), poly)


def f5_reduction_step(F: SignedPolynomial, B: Sequence[SignedPolynomial], todo=None,
                      sig_order: SignatureOrder = None):
    """One F5-reduction step: ``(done, todo)`` as lists.

    A reducer ``G`` must have a head dividing ``HT(F)``, a shifted signature
    strictly below ``sign(F)``, and a shifted signature that is neither
    syzygy-divisible nor rewritable. Without one, ``F`` is finished.
    """
    if not F.poly:
        return [F], []
    ring = F.poly.ring
    if sig_order is None:
        sig_order = SignatureOrder(ring.order)
    counter = active_counter()
    t = F.poly.ht
    fkey = sig_order.key(F.signature)
    tested = 0
    for G in B:
        if not G.poly:
            continue
        tested += 1
        v = mono_div(t, G.poly.ht)
        if v is None:
            continue
        if not sig_order.key(G.signature.shifted(v)) < fkey:
            continue
        if is_divisible(G.signature.shifted(v), B) or is_rewritable(v, G, B):
            continue
        counter.add("divisibility_tests", tested)
        fld = ring.field
        with counter.phase("reduction"):
            q = fld.div(F.poly.hc, G.poly.hc)
            counter.field(1)
            poly = F.poly.add_scaled(fld.neg(q), v, G.poly)
        counter.add("reduction_steps")
        if checks.enabled and poly:
            key = ring.order.key
            checks.require(key(poly.ht) < key(t), "F5-reduction did not lower the head")
        return [], [SignedPolynomial(F.signature, poly)]
    counter.add("divisibility_tests", tested)
    return [F], []


def reduction(todo: Iterable[SignedPolynomial], B: Sequence[SignedPolynomial],
              sig_order: SignatureOrder = None) -> List[SignedPolynomial]:
    """Drain ``todo`` in ascending signature order through F5-reduction."""
    todo = list(todo)
    done: List[SignedPolynomial] = []
    if not todo:
        return done
    if sig_order is None:
        sig_order = SignatureOrder(todo[0].poly.ring.order)
    last = None
    while todo:
        i = min(range(len(todo)), key=lambda k: sig_order.key(todo[k].signature))
        F = todo.pop(i)
        if checks.enabled:
            k = sig_order.key(F.signature)
            checks.require(last is None or last <= k, "Todo extraction went down in signature")
            last = k
        d, t = f5_reduction_step(F, B, todo, sig_order)
        if checks.enabled:
            checks.require(all(x.signature == F.signature for x in d + t),
                           "F5-reduction changed a signature")
        done.extend(d)
        todo.extend(t)
    return done


@dataclass
class F5BResult:
    basis: List[Polynomial]
    signed: List[SignedPolynomial]
    discarded: List[Tuple[CriticalPair, str]] = field(default_factory=list)


def f5b_run(F: Sequence[Polynomial], strategy: str = "f5", mode: str = "safe",
            selection: str = "degree") -> F5BResult:
    """Run F5B and keep the full signed state for inspection.

    ``selection="signature"`` takes the pair of smallest S-polynomial
    signature first; ``"degree"`` takes the smallest lcm degree first.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown reduction strategy {strategy!r}")
    if selection not in SELECTIONS:
        raise ValueError(f"unknown pair selection {selection!r}")
    gens = [f for f in F if f]
    if not gens:
        raise ValueError("f5b_basis needs at least one non-zero generator")
    ring = gens[0].ring
    for g in gens:
        gens[0]._check_ring(g)
    sig_order = SignatureOrder(ring.order)
    okey = ring.order.key
    counter = active_counter()
    one = ring.one_monomial

    B: List[SignedPolynomial] = [SignedPolynomial(Signature(i, one), f) for i, f in enumerate(gens, 1)]
    if strategy == "fast":
        from .fast_reduce import ReducerTable, s_poly_reduction

        table = ReducerTable.from_basis(B)

        def reduce(sp):
            return s_poly_reduction(sp, B, mode=mode, table=table, sig_order=sig_order)
    else:
        def reduce(sp):
            (P,) = reduction([sp], B, sig_order)
            return P

    tie = itertools.count()
    heap: List = []

    def push(cp):
        if selection == "signature":
            k = (sig_order.key(cp.signature(sig_order)), okey(cp.lcm))
        else:
            k = (sum(cp.lcm), okey(cp.lcm))
        heapq.heappush(heap, (k, min(cp.F.birth, cp.G.birth), max(cp.F.birth, cp.G.birth), next(tie), cp))

    for j in range(len(B)):
        for i in range(j):
            push(make_critical_pair(B[i], B[j]))
    counter.add("pairs_generated", len(heap))
    result = F5BResult([], B)

    while heap:
        cp = heapq.heappop(heap)[-1]
        if syzygy_criterion(cp, B):
            counter.add("pairs_syzygy")
            result.discarded.append((cp, "syzygy"))
            continue
        if rewritten_criterion(cp, B):
            counter.add("pairs_rewritten")
            result.discarded.append((cp, "rewritten"))
            continue
        sp = spol_signed(cp, sig_order)
        P = reduce(sp)
        if P.poly:
            fresh = [Q for Q in B if Q.poly]
            for Q in fresh:
                push(make_critical_pair(P, Q))
            counter.add("pairs_generated", len(fresh))
            counter.add("pairs_basis")
        else:
            counter.add("pairs_zero")
        B.append(P)
        if strategy == "fast":
            table.append(P.poly)

    result.basis = [Q.poly for Q in B if Q.poly]
    return result


def f5b_basis(F: Sequence[Polynomial], strategy: str = "f5", mode: str = "safe",
              selection: str = "degree") -> List[Polynomial]:
    """Gröbner basis of ``F`` via F5B; the raw (not inter-reduced) basis."""
    return f5b_run(F, strategy, mode, selection).basis

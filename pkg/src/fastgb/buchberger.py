"""Buchberger's algorithm with plain normal-form reduction.

Also home to the reference tools the other algorithms are judged by:
:func:`reduce_basis` (canonical reduced basis) and :func:`is_groebner`
(Buchberger's S-pair criterion).
"""

from __future__ import annotations

import heapq
from typing import List, Optional, Sequence, Tuple

from . import checks
from .counter import active_counter
from .polynomial import Polynomial
from .monomials import mono_div, mono_divides, mono_lcm


def spol(f: Polynomial, g: Polynomial) -> Polynomial:
    """``HC(g)*s_f*f - HC(f)*s_g*g`` where ``s_f*HT(f) = s_g*HT(g) = lcm``."""
    if not f or not g:
        raise ValueError("spol of a zero polynomial")
    f._check_ring(g)
    F = f.ring.field
    cf, tf = f.head()
    cg, tg = g.head()
    t = mono_lcm(tf, tg)
    counter = active_counter()
    with counter.phase("spol"):
        h = f.mul_term(cg, mono_div(t, tf)).add_scaled(F.neg(cf), mono_div(t, tg), g)
    if checks.enabled and h:
        checks.require(f.ring.order.key(h.ht) < f.ring.order.key(t), "spol head did not cancel")
    return h


def normal_form(h: Polynomial, G: Sequence[Polynomial], full: bool = True) -> Polynomial:
    """Reduce ``h`` modulo ``G``.

    The reducer for each step is the first element of ``G`` whose head
    divides the current term. With ``full=False`` only head terms are
    eliminated (top reduction).
    """
    ring = h.ring
    F = ring.field
    key = ring.order.key
    counter = active_counter()
    reducers = [(g.ht, g.hc, g) for g in G if g]
    for _, _, g in reducers:
        h._check_ring(g)
    p = h
    remainder = []
    with counter.phase("reduction"):
        while p:
            c, t = p.hc, p.ht
            for k, (tg, cg, g) in enumerate(reducers, 1):
                v = mono_div(t, tg)
                if v is not None:
                    counter.add("divisibility_tests", k)
                    q = F.div(c, cg)
                    counter.field(1)
                    nxt = p.add_scaled(F.neg(q), v, g)
                    counter.add("reduction_steps")
                    if checks.enabled and nxt:
                        checks.require(key(nxt.ht) < key(t), "normal form step did not lower the head")
                    p = nxt
                    break
            else:
                counter.add("divisibility_tests", len(reducers))
                if not full:
                    break
                remainder.append((t, c))
                p = p.tail()
    if not remainder:
        return p
    return Polynomial._raw(ring, tuple(remainder) + p.terms)


def _pair_heap_push(heap, G, i, j, key):
    heapq.heappush(heap, (key(mono_lcm(G[i].ht, G[j].ht)), i, j))


def buchberger_basis(F: Sequence[Polynomial], cofactors: bool = False):
    """Gröbner basis of the ideal generated by ``F``.

    Pairs are taken by the normal strategy (smallest lcm first, then smallest
    index pair) and no pair criteria are applied. Zero generators are dropped.

    With ``cofactors=True`` returns ``(G, C)`` where ``G[k] == sum(C[k][i] * F'[i])``
    for the non-zero generators ``F'``.
    """
    G = [f for f in F if f]
    if not G:
        raise ValueError("buchberger_basis needs at least one non-zero generator")
    ring = G[0].ring
    for g in G:
        G[0]._check_ring(g)
    key = ring.order.key
    counter = active_counter()
    m = len(G)
    C = None
    if cofactors:
        C = [[ring.one() if i == k else ring.zero() for i in range(m)] for k in range(m)]
    heap: List[Tuple] = []
    for j in range(m):
        for i in range(j):
            _pair_heap_push(heap, G, i, j, key)
    counter.add("pairs_generated", len(heap))
    while heap:
        _, i, j = heapq.heappop(heap)
        if cofactors:
            h, hc = _spol_tracked(G[i], G[j], C[i], C[j])
            h0, hc0 = _normal_form_tracked(h, hc, G, C)
        else:
            h0 = normal_form(spol(G[i], G[j]), G)
        if not h0:
            counter.add("pairs_zero")
            continue
        counter.add("pairs_basis")
        G.append(h0)
        if cofactors:
            C.append(hc0)
        new = len(G) - 1
        for i in range(new):
            _pair_heap_push(heap, G, i, new, key)
        counter.add("pairs_generated", new)
    return (G, C) if cofactors else G


def _spol_tracked(f, g, cf_vec, cg_vec):
    F = f.ring.field
    cf, tf = f.head()
    cg, tg = g.head()
    t = mono_lcm(tf, tg)
    sf, sg = mono_div(t, tf), mono_div(t, tg)
    h = f.mul_term(cg, sf).add_scaled(F.neg(cf), sg, g)
    vec = [a.mul_term(cg, sf).add_scaled(F.neg(cf), sg, b) for a, b in zip(cf_vec, cg_vec)]
    return h, vec


def _normal_form_tracked(h, vec, G, C):
    F = h.ring.field
    p, rem = h, []
    vec = list(vec)
    while p:
        c, t = p.hc, p.ht
        for g, gvec in zip(G, C):
            v = mono_div(t, g.ht)
            if v is not None:
                q = F.neg(F.div(c, g.hc))
                p = p.add_scaled(q, v, g)
                vec = [a.add_scaled(q, v, b) for a, b in zip(vec, gvec)]
                break
        else:
            rem.append((t, c))
            p = p.tail()
    return Polynomial._raw(h.ring, tuple(rem) + p.terms), vec


def reduce_basis(G: Sequence[Polynomial]) -> List[Polynomial]:
    """The reduced Gröbner basis: monic, inter-reduced, sorted by descending head term.

    ``G`` must already be a Gröbner basis.
    """
    G = [g for g in G if g]
    if not G:
        return []
    key = G[0].ring.order.key
    if checks.enabled:
        checks.require(is_groebner(G), "reduce_basis input is not a Gröbner basis")
    minimal: List[Polynomial] = []
    for g in sorted(G, key=lambda p: key(p.ht)):
        if not any(mono_divides(h.ht, g.ht) for h in minimal):
            minimal.append(g)
    reduced = []
    for g in minimal:
        others = [h for h in minimal if h is not g]
        reduced.append(normal_form(g, others).monic())
    reduced.sort(key=lambda p: key(p.ht), reverse=True)
    return reduced


def is_groebner(G: Sequence[Polynomial]) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero modulo ``G``."""
    G = [g for g in G if g]
    for j in range(len(G)):
        for i in range(j):
            if normal_form(spol(G[i], G[j]), G):
                return False
    return True

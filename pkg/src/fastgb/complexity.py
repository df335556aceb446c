"""Closed-form step counts for the three basis algorithms.

All formulas are polynomials in ``N = N(D, n)`` (the number of monomials of
degree at most ``D``) with coefficients in the generator count ``m`` and the
variable count ``n``. They are transcribed as published, including constants
that look off, and evaluated in exact rational arithmetic. Each is stored as
a coefficient list (index = power of ``N``), so degree and leading term can
be read off directly.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .polynomial import count_monomials, degree_bound

F_ = Fraction


class ModelDomainWarning(UserWarning):
    """The cost model was evaluated with ``m >= N``, outside the range it was derived for."""


@dataclass(frozen=True)
class CostModelInput:
    m: int
    n: int
    N: int
    D: Optional[int] = None

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"cost model needs m >= 1 and n >= 1, got m={self.m}, n={self.n}")
        if self.N < 0:
            raise ValueError(f"N must be non-negative, got {self.N}")
        if self.D is not None and count_monomials(self.D, self.n) != self.N:
            raise ValueError(f"N={self.N} does not equal N(D={self.D}, n={self.n})")

    @classmethod
    def from_degree(cls, m: int, n: int, D: int) -> "CostModelInput":
        return cls(m, n, count_monomials(D, n), D)

    @classmethod
    def from_system(cls, F) -> "CostModelInput":
        F = [f for f in F if f]
        if not F:
            raise ValueError("empty system")
        n = F[0].ring.nvars
        return cls.from_degree(len(F), n, degree_bound(F))

    @property
    def in_domain(self) -> bool:
        return self.m < self.N


def _warn_domain(inp: CostModelInput):
    if not inp.in_domain:
        warnings.warn(f"cost model evaluated with m={inp.m} >= N={inp.N}", ModelDomainWarning, stacklevel=3)


def horner(coeffs: Sequence[Fraction], x) -> Fraction:
    acc = F_(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def prop1_coefficients(m: int, n: int) -> List[Fraction]:
    """Buchberger: ``3/2 n N^5 + N^4 + (2mn - n/2 + 7) N^3 + ...``."""
    return [
        F_(0),
        -F_(1, 2) * m * m * n - m * n - F_(3, 2) * n - F_(1, 2),
        -m * m * n - F_(3, 2) * n - F_(3, 2),
        2 * m * n - F_(1, 2) * n + 7,
        F_(1),
        F_(3, 2) * n,
    ]


def prop2_coefficients(m: int, n: int) -> List[Fraction]:
    """F5B: ``2n/3 N^5 + (mn + 14n/3 + 2/3) N^4 + ...`` with its constant block."""
    return [
        -F_(11, 2) * m * m * n - 4 * m * m + F_(7, 2) * m * n + 2 * m,
        (-F_(2, 3) * m**3 * n - F_(2, 3) * m**3 + m * m * n + F_(17, 6) * m * n
         + F_(8, 3) * m - F_(11, 2) * n - 2),
        (F_(10, 3) * m**3 * n - 3 * m * m * n - m * m + F_(14, 3) * m * n + 2 * m
         - F_(16, 3) * n - F_(2, 3)),
        -m * m * n + m * n + m + F_(11, 6) * n + 2,
        m * n + F_(14, 3) * n + F_(2, 3),
        F_(2, 3) * n,
    ]


def prop3_coefficients(m: int, n: int) -> List[Fraction]:
    """F5B with the fast reducer choice: ``(mn + 4n) N^4 + ...``; degree 4 in ``N``."""
    return [
        F_(4 * m * m * n - 2 * m * m + 2 * m),
        F_(-7 * m * m * n + 10 * m * n - m * m - m - 2 * n - 2),
        F_(-3 * m * m * n - m * m + 5 * m * n - 5 * n - 1),
        -m * m * n + m * n + m + F_(15, 2) * n + 31,
        F_(m * n + 4 * n),
    ]


def eval_prop1(inp: CostModelInput) -> Fraction:
    _warn_domain(inp)
    return horner(prop1_coefficients(inp.m, inp.n), inp.N)


def eval_prop2(inp: CostModelInput) -> Fraction:
    _warn_domain(inp)
    return horner(prop2_coefficients(inp.m, inp.n), inp.N)


def eval_prop3(inp: CostModelInput) -> Fraction:
    _warn_domain(inp)
    return horner(prop3_coefficients(inp.m, inp.n), inp.N)


def eval_f5_reduction_cost(inp: CostModelInput, B_size: int) -> Fraction:
    """Cost of one F5-reduction call against a basis of ``B_size`` elements (quadratic in it)."""
    m, n, N, B = inp.m, inp.n, F_(inp.N), B_size
    return ((2 * n * N**2 + (2 * n + 2) * N) * B**2
            + (4 * n * N**2 + 7 * n * N) * B
            + (m * n + n) * N**3 + (m * n + m + 1) * N**2)


def eval_fast_reduction_cost(inp: CostModelInput, B_size: int) -> Fraction:
    """Cost of one heuristic S-polynomial reduction call (linear in ``B_size``)."""
    m, n, N, B = inp.m, inp.n, F_(inp.N), B_size
    return ((2 * n * N**2 + 7 * n * N) * B
            + (m * n + n) * N**3 + (m * n + m + 2 * n + 1) * N**2 + (n + 2) * N)


def fast_reduction_crossover(inp: CostModelInput) -> int:
    """Smallest ``B0 >= 0`` with fast cost < F5 cost for every basis size ``B >= B0``.

    The difference ``F5 - fast`` is quadratic in ``B`` with a positive leading
    coefficient: it falls until its vertex and rises after it, so one scan
    rightwards from the vertex finds the last sign change.
    """
    def diff(B):
        return eval_f5_reduction_cost(inp, B) - eval_fast_reduction_cost(inp, B)

    c = diff(0)
    a = (diff(2) - 2 * diff(1) + c) / 2
    b = diff(1) - c - a
    B = max(0, math.ceil(-b / (2 * a)))
    while diff(B) <= 0:
        B += 1
    # left of the vertex the difference only grows, so one positive step back means all are
    if B > 0 and diff(B - 1) > 0:
        return 0
    return B


# --- leading terms ------------------------------------------------------------

LEADING_TERMS = {
    "buchberger": "3/2*n*N^5",
    "f5b": "2*n/3*N^5",
    "f5b-fast": "m*n*N^4",
}


def leading_terms(inp: CostModelInput) -> Dict[str, Fraction]:
    """Value of the dominant monomial of each cost formula."""
    N = F_(inp.N)
    return {
        "buchberger": F_(3, 2) * inp.n * N**5,
        "f5b": F_(2, 3) * inp.n * N**5,
        "f5b-fast": F_(inp.m * inp.n) * N**4,
    }


def dominant_coefficients(alg: str, m: int, n: int) -> List[Fraction]:
    """Abbreviated cost polynomials keeping only the part of each coefficient that dominates in ``m`` and ``n``."""
    if alg == "buchberger":
        return [F_(0), -F_(1, 2) * m * m * n, F_(-m * m * n), F_(2 * m * n), F_(1), F_(3, 2) * n]
    if alg == "f5b":
        return [-F_(11, 2) * m * m * n, -F_(2, 3) * m**3 * n, F_(10, 3) * m**3 * n,
                F_(-m * m * n), F_(m * n), F_(2, 3) * n]
    if alg == "f5b-fast":
        return [F_(4 * m * m * n), F_(-7 * m * m * n), F_(-3 * m * m * n), F_(-m * m * n), F_(m * n)]
    raise ValueError(f"unknown algorithm {alg!r}")


def poly_degree(coeffs: Sequence[Fraction]) -> int:
    for d in range(len(coeffs) - 1, -1, -1):
        if coeffs[d]:
            return d
    return -1


def _last_nonnegative_integer_root_bound(coeffs: Sequence[Fraction]) -> int:
    """Integer ``R`` beyond which the polynomial has the sign of its leading coefficient (Cauchy)."""
    d = poly_degree(coeffs)
    lead = coeffs[d]
    bound = 1 + max((abs(c / lead) for c in coeffs[:d]), default=F_(0))
    return int(bound) + 1


def dominance_threshold(m: int, n: int) -> int:
    """Smallest ``N0`` such that ``prop3 < prop2 < prop1`` for every integer ``N >= N0``.

    Each difference polynomial has positive leading coefficient; past its
    Cauchy root bound it is positive, so only finitely many ``N`` need
    checking.
    """
    p1, p2, p3 = prop1_coefficients(m, n), prop2_coefficients(m, n), prop3_coefficients(m, n)
    width = max(len(p1), len(p2), len(p3))

    def pad(c):
        return list(c) + [F_(0)] * (width - len(c))

    p1, p2, p3 = pad(p1), pad(p2), pad(p3)
    d21 = [a - b for a, b in zip(p1, p2)]
    d32 = [a - b for a, b in zip(p2, p3)]
    for d in (d21, d32):
        if d[poly_degree(d)] <= 0:
            raise ArithmeticError("difference polynomial does not grow positively")
    R = max(_last_nonnegative_integer_root_bound(d21), _last_nonnegative_integer_root_bound(d32))
    N0 = 0
    for N in range(R, -1, -1):
        if not (horner(d21, N) > 0 and horner(d32, N) > 0):
            N0 = N + 1
            break
    return N0


# --- pair-count recurrences ----------------------------------------------------

def closed_form_pairs(m: int, i: int) -> int:
    """Pending-pair count after ``i`` growth steps: ``m(m-1)/2 + (m-1)i + i(i-1)/2``."""
    if m < 1 or i < 0:
        raise ValueError(f"closed_form_pairs needs m >= 1, i >= 0, got m={m}, i={i}")
    return m * (m - 1) // 2 + (m - 1) * i + i * (i - 1) // 2


@dataclass
class PairTrace:
    """Two-phase pair-count simulation.

    ``basis`` and ``pairs`` are the basis size and pending-pair count after
    each loop (index 0 is the initial state). ``buchberger_pairs`` iterates
    the Buchberger form ``|B_{i+1}| = |B_i| - 1 + |G_i|`` over the growth
    phase for comparison; it coincides with ``pairs`` there.
    """

    m: int
    N: int
    basis: List[int] = field(default_factory=list)
    pairs: List[int] = field(default_factory=list)
    buchberger_pairs: List[int] = field(default_factory=list)

    @property
    def growth_steps(self) -> int:
        return self.N - self.m

    @property
    def W(self) -> int:
        return self.growth_steps + self.pairs[self.growth_steps]

    def growth_pairs(self) -> List[int]:
        return self.pairs[: self.growth_steps + 1]


def simulate_pair_counts(m: int, N: int) -> PairTrace:
    """Iterate the pair-count recurrences: growth while the basis fills up to ``N``, then drain."""
    if m < 1 or m >= N:
        raise ValueError(f"simulate_pair_counts needs 1 <= m < N, got m={m}, N={N}")
    tr = PairTrace(m, N, [m], [m * (m - 1) // 2], [m * (m - 1) // 2])
    for i in range(1, N - m + 1):
        # each loop consumes one pair and adds one for every existing basis element
        tr.pairs.append(tr.pairs[-1] - 1 + tr.basis[-1])
        tr.basis.append(tr.basis[-1] + 1)
        g_prev = m + (i - 1)
        tr.buchberger_pairs.append(tr.buchberger_pairs[-1] - 1 + g_prev)
    while tr.pairs[-1] > 0:
        tr.pairs.append(tr.pairs[-1] - 1)
        tr.basis.append(tr.basis[-1])
    return tr


# --- report ----------------------------------------------------------------------

@dataclass
class ComplexityReport:
    inputs: CostModelInput
    predicted: Dict[str, Fraction]
    leading_terms: Dict[str, Fraction]
    measured: Dict[str, dict] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "m": self.inputs.m, "n": self.inputs.n, "D": self.inputs.D, "N": self.inputs.N,
            "in_domain": self.inputs.in_domain,
            "predicted": {k: str(v) for k, v in self.predicted.items()},
            "leading_terms": {k: {"formula": LEADING_TERMS[k], "value": str(v)}
                              for k, v in self.leading_terms.items()},
            "measured": self.measured,
        }


def complexity_report(inp: CostModelInput, measured: Dict[str, dict] = None) -> ComplexityReport:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ModelDomainWarning)
        predicted = {
            "buchberger": eval_prop1(inp),
            "f5b": eval_prop2(inp),
            "f5b-fast": eval_prop3(inp),
        }
    return ComplexityReport(inp, predicted, leading_terms(inp), dict(measured or {}))

"""Exact Gröbner bases: Buchberger, F5B, and F5B with a fast reducer choice."""

from .buchberger import buchberger_basis, is_groebner, normal_form, reduce_basis, spol
from .counter import OpCounter, counting
from .f5b import f5b_basis, f5b_run
from .fast_reduce import fast_strategy, reduction_sequence, s_poly_reduction
from .fields import QQ, PrimeField
from .parsing import parse_system
from .polynomial import Polynomial, PolyRing, count_monomials, degree_bound

__all__ = [
    "PolyRing", "Polynomial", "QQ", "PrimeField", "count_monomials", "degree_bound",
    "spol", "normal_form", "buchberger_basis", "reduce_basis", "is_groebner",
    "f5b_basis", "f5b_run", "fast_strategy", "reduction_sequence", "s_poly_reduction",
    "OpCounter", "counting", "parse_system",
]

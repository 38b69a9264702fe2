"""Exact sparse polynomial arithmetic and Groebner bases."""

from .field import DEFAULT_PRIME, QQ, PrimeField, Rationals, parse_field
from .groebner import (
    GBReport,
    GroebnerBasis,
    buchberger,
    divide,
    ideal_contains,
    ideal_equal,
    is_groebner,
    leading_monomial,
    minimal_monomials,
    monomial_divides,
    normal_form,
    reduced_groebner_basis,
    s_polynomial,
)
from .monomial_ideal import hilbert_function, monomial_ideal_dimension
from .orders import MonomialOrder, OrderSyntaxError
from .polynomial import ExponentOverflow, Polynomial

__all__ = [
    "DEFAULT_PRIME", "QQ", "PrimeField", "Rationals", "parse_field",
    "GBReport", "GroebnerBasis", "buchberger", "divide", "ideal_contains", "ideal_equal",
    "is_groebner", "leading_monomial", "minimal_monomials", "monomial_divides",
    "normal_form", "reduced_groebner_basis", "s_polynomial",
    "hilbert_function", "monomial_ideal_dimension",
    "MonomialOrder", "OrderSyntaxError", "ExponentOverflow", "Polynomial",
]

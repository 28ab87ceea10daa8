"""Hilbert polynomials, arithmetic genus and Euler characteristic of projective schemes."""

from .polyring import GREVLEX, LEX, MonomialOrder, Polynomial
from .groebner import Ideal, MonomialIdeal, buchberger, elimination_ideal, leading_ideal, reduce
from .parsing import parse_polynomial, format_polynomial

__version__ = "0.1.0"

__all__ = [
    "GREVLEX",
    "LEX",
    "MonomialOrder",
    "Polynomial",
    "Ideal",
    "MonomialIdeal",
    "buchberger",
    "elimination_ideal",
    "leading_ideal",
    "reduce",
    "parse_polynomial",
    "format_polynomial",
]

"""Noncommutative polynomial computer algebra over the rationals.

Gröbner Bases (Mora's algorithm), Involutive Bases under twelve
involutive divisions, and basis conversion walks between the
degree-based monomial orderings, for free associative algebras with
exact rational coefficients.
"""

from .algebra import (Alphabet, ParseError, Polynomial, Term,
                      format_polynomial, parse_polynomial, poly_combine,
                      prefix, subword, suffix, term_mul_poly, word_concat)
from .groebner import (GroebnerResult, divide, log_expand, mora,
                       reduce_basis, sugar_value)
from .involutive import (InvolutiveBasisResult, InvolutiveDivision,
                         MultiplicativeTable, assign_multiplicative,
                         autoreduce, fast_inv_divides_global, inv_divide,
                         involutive_basis, involutively_divides,
                         overlap_skip_reduction)
from .orderings import (MonomialOrdering, OrderingFunction,
                        admissibility_check, decomposition, degree_function,
                        harmonious, initial)
from .spoly import OverlapSpec, criterion2_applies, enumerate_overlaps, s_polynomial
from .walk import WalkJob, WalkResult, groebner_walk, involutive_walk

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]

"""Words, terms, polynomials, parsing and printing."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncpoly import (Alphabet, MonomialOrdering, ParseError, Polynomial, Term,
                    format_polynomial, parse_polynomial, poly_combine, prefix,
                    subword, suffix, term_mul_poly, word_concat)

from conftest import P, w


@pytest.fixture
def o(xyz):
    return MonomialOrdering("deglex", xyz)


# ---------------------------------------------------------------------------
# Alphabet
# ---------------------------------------------------------------------------

def test_alphabet_rejects_empty_and_duplicates():
    with pytest.raises(ValueError):
        Alphabet([])
    with pytest.raises(ValueError):
        Alphabet(["x", "y", "x"])


def test_alphabet_lookup(xyz):
    assert xyz.index("y") == 1
    assert xyz.name(2) == "z"
    with pytest.raises(ValueError):
        xyz.index("q")


# ---------------------------------------------------------------------------
# Words: 1-based, inclusive subword/prefix/suffix
# ---------------------------------------------------------------------------

def test_subword(xyz):
    zyxx = w(xyz, "zyxx")
    assert subword(zyxx, 2, 3) == w(xyz, "yx")


def test_prefix(xyz):
    assert prefix(w(xyz, "xxyz"), 3) == w(xyz, "xxy")


def test_suffix_full_length_is_identity(xyz):
    yyzx = w(xyz, "yyzx")
    assert suffix(yyzx, 4) == yyzx


def test_subword_out_of_range_errors(xyz):
    m = w(xyz, "xyz")
    for i, j in ((0, 2), (2, 1), (1, 4), (4, 4)):
        with pytest.raises(ValueError):
            subword(m, i, j)


def test_word_concat():
    a = Alphabet(["x1", "x2", "x3"])
    u = (2, 2, 1)       # x3^2 x2
    v = (0, 0, 0, 2)    # x1^3 x3
    assert word_concat(u, v) == (2, 2, 1, 0, 0, 0, 2)


def test_word_concat_unit(xyz):
    m = w(xyz, "zxy")
    assert word_concat((), m) == m
    assert word_concat(m, ()) == m


def test_word_concat_letter_sequence(xyz):
    assert word_concat(w(xyz, "xy"), w(xyz, "yx")) == w(xyz, "xyyx")


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------

def test_zero_polynomial_accessors_error(xyz, o):
    zero = Polynomial.zero(xyz, o)
    assert zero.is_zero()
    for fn in (zero.lt, zero.lm, zero.lc, zero.degree):
        with pytest.raises(ValueError):
            fn()


def test_polynomial_immutable(xyz, o):
    p = P(xyz, o, "x + y")
    with pytest.raises(AttributeError):
        p.terms = ()


def test_terms_strictly_descending(xyz, o):
    p = P(xyz, o, "z + x*y + 1 + y*z")
    keys = [o.key(t.mon) for t in p.terms]
    assert keys == sorted(keys, reverse=True)
    assert p.lm() == w(xyz, "xy")


def test_poly_combine_demo():
    ab = Alphabet(["a", "b"])
    o = MonomialOrdering("deglex", ab)
    left = P(ab, o, "2*b^2 + 2*b*a + 6*a")
    right = P(ab, o, "2*b^2 + a*b + 4*b")
    assert poly_combine(left, right, -1) == P(ab, o, "2*b*a - a*b + 6*a - 4*b")


def test_poly_combine_cancellation(xyz, o):
    p = P(xyz, o, "x*y - 3*z + 1/2")
    assert poly_combine(p, p, -1).is_zero()
    assert poly_combine(P(xyz, o, "x + z"), P(xyz, o, "x"), -1) == P(xyz, o, "z")


def test_term_mul_poly_division_quotient(xyz, o):
    p = P(xyz, o, "5*z^2*x + 2*y^2 + x + 4")
    got = term_mul_poly(Term(Fraction(3, 5), w(xyz, "xyx")), p,
                        Term(Fraction(1), w(xyz, "xx")))
    want = P(xyz, o, "3*x*y*x*z^2*x^3 + 6/5*x*y*x*y^2*x^2 + 3/5*x*y*x^4 "
                     "+ 12/5*x*y*x^3")
    assert got == want


def test_term_mul_poly_identity(xyz, o):
    p = P(xyz, o, "x*y - 3*z + 1")
    unit = Term(Fraction(1), ())
    assert term_mul_poly(unit, p, unit) == p


def test_term_mul_poly_term_by_term(xyz, o):
    got = term_mul_poly(Term(Fraction(1), w(xyz, "x")), P(xyz, o, "y + 1"),
                        Term(Fraction(1), ()))
    assert got == P(xyz, o, "x*y + x")


def test_term_mul_poly_rejects_zero_terms(xyz, o):
    with pytest.raises(ValueError):
        term_mul_poly(Term(Fraction(0), ()), P(xyz, o, "x"),
                      Term(Fraction(1), ()))


def test_monic_and_scaled(xyz, o):
    p = P(xyz, o, "2*x*y - 4*z")
    assert p.monic() == P(xyz, o, "x*y - 2*z")
    assert p.scaled(Fraction(1, 2)) == P(xyz, o, "x*y - 2*z")
    assert (-p) == P(xyz, o, "-2*x*y + 4*z")
    assert p.scaled(0).is_zero()


# ---------------------------------------------------------------------------
# Parsing and printing
# ---------------------------------------------------------------------------

def test_parse_two_terms(xyz, o):
    p = parse_polynomial("x*y - z", xyz, o)
    assert p.terms == (Term(Fraction(1), w(xyz, "xy")),
                       Term(Fraction(-1), w(xyz, "z")))


def test_parse_with_coefficients_and_powers(xy):
    o = MonomialOrdering("deglex", xy)
    p = parse_polynomial("2*x^2*y^2 - 2*x*y^2 + x^2", xy, o)
    assert p.terms == (Term(Fraction(2), w(xy, "xxyy")),
                       Term(Fraction(-2), w(xy, "xyy")),
                       Term(Fraction(1), w(xy, "xx")))


def test_parse_rationals_and_constants(xyz, o):
    p = parse_polynomial("-3/4 + 1/2*z", xyz, o)
    assert p.terms == (Term(Fraction(1, 2), w(xyz, "z")),
                       Term(Fraction(-3, 4), ()))


def test_parse_unknown_generator(xyz, o):
    with pytest.raises(ParseError):
        parse_polynomial("q", xyz, o)


def test_parse_errors_carry_position(xyz, o):
    for text in ("", "x +", "x ^ 0", "1/0", "x y", "2**x"):
        with pytest.raises(ParseError):
            parse_polynomial(text, xyz, o)


def test_parse_longest_name_first():
    ab = Alphabet(["xx", "x"])
    o = MonomialOrdering("deglex", ab)
    p = parse_polynomial("xx*x", ab, o)
    assert p.terms == (Term(Fraction(1), (0, 1)),)


def test_format_zero(xyz, o):
    assert format_polynomial(Polynomial.zero(xyz, o)) == "0"


def test_format_runs_powers(xyz, o):
    assert format_polynomial(P(xyz, o, "x^2*y*x - 1/2")) == "x^2*y*x - 1/2"


# ---------------------------------------------------------------------------
# Property suites
# ---------------------------------------------------------------------------

_ALPHABET = Alphabet(["x", "y", "z"])
_ORDERING = MonomialOrdering("deglex", _ALPHABET)

words = st.lists(st.integers(0, 2), max_size=6).map(tuple)
coeffs = st.builds(Fraction, st.integers(-9, 9).filter(bool),
                   st.integers(1, 9))
raw_terms = st.lists(st.tuples(coeffs, words), min_size=0, max_size=8)
polys = raw_terms.map(
    lambda ts: Polynomial.from_terms([Term(c, m) for c, m in ts],
                                     _ALPHABET, _ORDERING))
nonzero_polys = polys.filter(lambda p: not p.is_zero())
terms = st.tuples(coeffs, words).map(lambda t: Term(*t))


@given(polys)
def test_normalization_idempotent(p):
    again = Polynomial.from_terms(p.terms, _ALPHABET, _ORDERING)
    assert again.terms == p.terms


@settings(max_examples=200)
@given(nonzero_polys)
def test_parse_format_round_trip(p):
    assert parse_polynomial(format_polynomial(p), _ALPHABET, _ORDERING) == p


@given(polys, polys)
def test_exact_add_then_subtract(p, q):
    assert poly_combine(poly_combine(p, q, 1), q, -1) == p
    for t in poly_combine(p, q, 1).terms:
        assert isinstance(t.coeff, Fraction)


@given(terms, terms, polys, terms, terms)
def test_term_mul_associativity(l1, l2, p, r2, r1):
    nested = term_mul_poly(l1, term_mul_poly(l2, p, r2), r1)
    flat = term_mul_poly(Term(l1.coeff * l2.coeff, l1.mon + l2.mon), p,
                         Term(r2.coeff * r1.coeff, r2.mon + r1.mon))
    assert nested == flat


@given(terms, polys, polys, terms)
def test_term_mul_distributes_over_combine(l, p, q, r):
    lhs = term_mul_poly(l, poly_combine(p, q, 1), r)
    rhs = poly_combine(term_mul_poly(l, p, r), term_mul_poly(l, q, r), 1)
    assert lhs == rhs

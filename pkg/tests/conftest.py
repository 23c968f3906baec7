"""Shared fixtures and small helpers for the test suite."""

import random

import pytest

from ncpoly import (Alphabet, Polynomial, Term, divide, enumerate_overlaps,
                    parse_polynomial, s_polynomial)


@pytest.fixture
def xyz():
    return Alphabet(["x", "y", "z"])


@pytest.fixture
def xy():
    return Alphabet(["x", "y"])


@pytest.fixture
def group_alphabet():
    # inverses as capitals, capitals greater
    return Alphabet(["Y", "X", "y", "x"])


def w(alphabet, text):
    """Word from a string of single-letter generator names."""
    return tuple(alphabet.index(ch) for ch in text)


def P(alphabet, ordering, *texts):
    polys = [parse_polynomial(t, alphabet, ordering) for t in texts]
    return polys[0] if len(polys) == 1 else polys


def monic_set(polys):
    return {p.monic() for p in polys}


def random_word(rng, n, max_degree):
    return tuple(rng.randrange(n) for _ in range(rng.randint(0, max_degree)))


def random_poly(rng, alphabet, ordering, max_degree=4, max_terms=5):
    terms = [Term(rng.randint(-5, 5) or 1,
                  random_word(rng, len(alphabet), max_degree))
             for _ in range(rng.randint(1, max_terms))]
    return Polynomial.from_terms(terms, alphabet, ordering)


def all_spolys_reduce_to_zero(basis, ordering):
    """The Gröbner Basis property, checked directly from the definition."""
    for i in range(len(basis)):
        for j in range(i, len(basis)):
            for spec in enumerate_overlaps(basis[i].lm(), basis[j].lm(),
                                           i == j, i, j):
                s = s_polynomial(spec, basis[i], basis[j])
                if s.is_zero():
                    continue
                rem, _ = divide(s, basis, ordering)
                if not rem.is_zero():
                    return False
    return True


def brute_force_overlaps(u1, u2, same_element):
    """Oracle for enumerate_overlaps: test every placement pair of u1 and
    u2 inside every word of the right length and record the genuine
    overlaps (shared letter positions, no redundant slack on either
    side)."""
    d1, d2 = len(u1), len(u2)
    found = set()
    for s in range(-(d2 - 1), d1):
        # place u1 at offset 0 and u2 at offset s; keep placements whose
        # letters agree on the intersection, which must be nonempty
        lo, hi = max(0, s), min(d1, s + d2)
        if lo >= hi:
            continue
        if any(u1[k] != u2[k - s] for k in range(lo, hi)):
            continue
        start, end = min(0, s), max(d1, s + d2)
        word = [None] * (end - start)
        for k in range(d1):
            word[k - start] = u1[k]
        for k in range(d2):
            word[s + k - start] = u2[k]
        l1 = tuple(word[:0 - start])
        r1 = tuple(word[d1 - start:])
        l2 = tuple(word[:s - start])
        r2 = tuple(word[s + d2 - start:])
        if same_element and l1 == l2:
            continue
        found.add((l1, r1, l2, r2))
    return found


def seeded_rng(name):
    return random.Random(hash(name) & 0xFFFFFFFF)

"""Mora's algorithm for noncommutative Gröbner Bases.

Also houses the division algorithm, the unique reduced basis, sugar
values and logged representations (explicit expressions of basis
elements over the input generators).

The algorithm need not terminate -- noncommutative monomial ideals can
fail to be finitely generated -- so runs are bounded by a lead-monomial
degree cap and an iteration cap, reported through the result status
rather than an exception.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .algebra import Polynomial, Term, poly_combine, term_mul_poly
from .spoly import enumerate_overlaps, s_polynomial, settled_key, criterion2_applies

DEFAULT_MAX_DEGREE = 20
DEFAULT_MAX_ITERATIONS = 100_000


# ---------------------------------------------------------------------------
# Logged representations: a list of (left term, input index, right term)
# triples whose expansion sum(l * F[k] * r) reproduces a polynomial exactly.
# ---------------------------------------------------------------------------

def log_identity(k):
    return ((Term(Fraction(1), ()), k, Term(Fraction(1), ())),)


def log_scale(log, scalar):
    scalar = Fraction(scalar)
    if scalar == 0:
        return ()
    return tuple((Term(l.coeff * scalar, l.mon), k, r) for l, k, r in log)


def log_conjugate(lterm, log, rterm):
    """The representation of lterm * (expansion of log) * rterm."""
    return tuple(
        (Term(lterm.coeff * l.coeff, lterm.mon + l.mon), k,
         Term(r.coeff * rterm.coeff, r.mon + rterm.mon))
        for l, k, r in log)


def log_merge(*logs):
    acc = {}
    for log in logs:
        for l, k, r in log:
            key = (l.mon, k, r.mon)
            entry = acc.get(key)
            coeff = l.coeff * r.coeff
            acc[key] = coeff if entry is None else entry + coeff
    return tuple(
        (Term(c, lm), k, Term(Fraction(1), rm))
        for (lm, k, rm), c in acc.items() if c != 0)


def log_expand(log, F):
    """sum(l * F[k] * r) over the triples of the representation."""
    if not F:
        raise ValueError("cannot expand a representation over an empty basis")
    acc = Polynomial.zero(F[0].alphabet, F[0].ordering)
    for l, k, r in log:
        acc = poly_combine(acc, term_mul_poly(l, F[k], r), 1)
    return acc


# ---------------------------------------------------------------------------
# Division
# ---------------------------------------------------------------------------

def find_subword(u, v):
    """Smallest 0-based offset at which v occurs inside u, else None."""
    dv = len(v)
    for s in range(len(u) - dv + 1):
        if u[s:s + dv] == v:
            return s
    return None


def divide(p, P, ordering=None):
    """Divide p by the set P, returning (remainder, log).

    Works term by term: while some term of the running polynomial has a
    basis lead monomial as a subword, the leftmost placement (smallest
    left cofactor) of the first dividing basis element is cancelled;
    irreducible lead terms migrate to the remainder.  The log's triples
    reference indices into P and satisfy p = remainder + expansion(log).
    """
    if ordering is None:
        ordering = p.ordering
    if any(q.is_zero() for q in P):
        raise ValueError("divisors must be nonzero")
    work = p.with_ordering(ordering)
    divisors = [(q.with_ordering(ordering)) for q in P]
    lms = [q.lm() for q in divisors]
    rem_terms = []
    log = []
    while not work.is_zero():
        u = work.lm()
        c = work.lc()
        hit = None
        for jj, lmj in enumerate(lms):
            s = find_subword(u, lmj)
            if s is not None:
                hit = (jj, s)
                break
        if hit is None:
            rem_terms.append(work.lt())
            work = Polynomial(work.terms[1:], work.alphabet, ordering, _trusted=True)
            continue
        jj, s = hit
        ul, ur = u[:s], u[s + len(lms[jj]):]
        coeff = c / divisors[jj].lc()
        lterm, rterm = Term(coeff, ul), Term(Fraction(1), ur)
        work = poly_combine(work, term_mul_poly(lterm, divisors[jj], rterm), -1)
        log.append((lterm, jj, rterm))
    remainder = Polynomial(tuple(rem_terms), p.alphabet, ordering, _trusted=True)
    return remainder, tuple(log)


# ---------------------------------------------------------------------------
# Sugar
# ---------------------------------------------------------------------------

def sugar_value(spec, sugar1, sugar2):
    """max(deg l1 + Sug_1 + deg r1, deg l2 + Sug_2 + deg r2)."""
    return max(len(spec.l1) + sugar1 + len(spec.r1),
               len(spec.l2) + sugar2 + len(spec.r2))


# ---------------------------------------------------------------------------
# Mora's algorithm
# ---------------------------------------------------------------------------

@dataclass
class GroebnerResult:
    basis: list
    logs: Optional[list]
    stats: dict = field(default_factory=dict)
    status: str = "complete"


def mora(F, ordering, strategy="normal", use_criterion2=True,
         max_degree=DEFAULT_MAX_DEGREE, max_iterations=DEFAULT_MAX_ITERATIONS,
         logged=False):
    """Compute a Gröbner Basis for <F> (in the case of termination).

    The pending list is kept ascending by overlap word (sugar strategy:
    by sugar value first), with ties between distinct element pairs
    broken by participant indices (a < c, or a = c and b <= d) and any
    remaining ties by the first left cofactor; new entries with equal
    keys go in front of existing ones.
    """
    if not ordering.admissible:
        raise ValueError(f"ordering {ordering.kind} is not admissible")
    if strategy not in ("normal", "sugar"):
        raise ValueError(f"unknown strategy {strategy!r}")
    G = [f.with_ordering(ordering) for f in F if not f.is_zero()]
    if not G:
        raise ValueError("input basis has no nonzero polynomials")
    sugars = [g.degree() for g in G]
    logs = [log_identity(k) for k in range(len(G))] if logged else None

    keys = []      # parallel sorted key list for the pending queue
    pending = []   # (spec, sugar)

    def queue_key(spec, sugar):
        a, b = min(spec.i, spec.j), max(spec.i, spec.j)
        base = (ordering.key(spec.overlap_word), a, b, len(spec.l1), spec.l1)
        return (sugar,) + base if strategy == "sugar" else base

    def add_overlaps(i, j):
        for spec in enumerate_overlaps(G[i].lm(), G[j].lm(), i == j, i, j):
            sug = sugar_value(spec, sugars[i], sugars[j])
            key = queue_key(spec, sug)
            at = bisect.bisect_left(keys, key)
            keys.insert(at, key)
            pending.insert(at, (spec, sug))

    for i in range(len(G)):
        for j in range(i, len(G)):
            add_overlaps(i, j)

    settled = set()
    stats = {"spolys_considered": 0, "zero_reductions": 0,
             "criterion2_skips": 0, "iterations": 0}
    status = "complete"

    while pending:
        stats["iterations"] += 1
        if stats["iterations"] > max_iterations:
            status = "iteration_cap_hit"
            break
        keys.pop(0)
        spec, sug = pending.pop(0)
        if use_criterion2 and criterion2_applies(spec, G, settled):
            stats["criterion2_skips"] += 1
            settled.add(settled_key(spec))
            continue
        stats["spolys_considered"] += 1
        s = s_polynomial(spec, G[spec.i], G[spec.j])
        if s.is_zero():
            settled.add(settled_key(spec))
            stats["zero_reductions"] += 1
            continue
        rem, dlog = divide(s, G, ordering)
        settled.add(settled_key(spec))
        if rem.is_zero():
            stats["zero_reductions"] += 1
            continue
        if len(rem.lm()) > max_degree:
            status = "degree_cap_hit"
            break
        if logged:
            s_log = log_merge(
                log_conjugate(Term(G[spec.j].lc(), spec.l1), logs[spec.i],
                              Term(Fraction(1), spec.r1)),
                log_scale(log_conjugate(Term(G[spec.i].lc(), spec.l2),
                                        logs[spec.j],
                                        Term(Fraction(1), spec.r2)), -1))
            used = [log_scale(log_conjugate(l, logs[k], r), -1) for l, k, r in dlog]
            logs.append(log_merge(s_log, *used))
        G.append(rem)
        sugars.append(sug)
        new = len(G) - 1
        for i in range(len(G)):
            add_overlaps(i, new)

    stats["basis_size"] = len(G)
    return GroebnerResult(basis=G, logs=logs, stats=stats, status=status)


# ---------------------------------------------------------------------------
# The unique reduced basis
# ---------------------------------------------------------------------------

def reduce_basis(G, ordering):
    """The unique reduced Gröbner Basis: monic elements, no element's lead
    monomial a multiple of another's, every element fully reduced against
    the rest.  Output sorted descending by lead monomial."""
    work = [g.with_ordering(ordering).monic() for g in G if not g.is_zero()]
    i = 0
    while i < len(work):
        lm_i = work[i].lm()
        if any(jj != i and find_subword(lm_i, work[jj].lm()) is not None
               for jj in range(len(work))):
            del work[i]
        else:
            i += 1
    done = []
    rest = list(work)
    while rest:
        g = rest.pop(0)
        others = rest + done
        if others:
            rem, _ = divide(g, others, ordering)
        else:
            rem = g
        if not rem.is_zero():
            done.append(rem.monic())
    done.sort(key=lambda g: ordering.key(g.lm()), reverse=True)
    return done

"""Noncommutative involutive divisions and the Involutive Basis algorithm.

Twelve divisions are supported, keyed 1-12:

     1  Left                      8  RightOverlap
     2  Right                     9  StrongRightOverlap
     3  LeftOverlap              10  TwoSidedRightOverlap
     4  StrongLeftOverlap        11  SuffixOnlyRightOverlap
     5  TwoSidedLeftOverlap      12  SubwordFreeLeftOverlap's mirror
     6  PrefixOnlyLeftOverlap        (SubwordFreeRightOverlap)
     7  SubwordFreeLeftOverlap

Left and Right are global (the multiplicative sets do not depend on the
basis); the rest are local and recomputed from scratch whenever the
basis changes.  Every right-handed kind is the exact word-reversal
mirror of the corresponding left-handed kind.

Involutive divisibility comes in two flavours: thin divisors test only
the cofactor letters adjacent to the divisor (the last letter of the
left cofactor and the first of the right), thick divisors test every
cofactor letter.  Thin is the default.  Thick-divisor runs can leave
words conventionally reducible yet involutively irreducible; see the
degree-cap tests for a witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .algebra import Polynomial, Term, poly_combine, term_mul_poly
from .groebner import (DEFAULT_MAX_DEGREE, DEFAULT_MAX_ITERATIONS,
                       log_conjugate, log_identity, log_merge, log_scale)

DIVISION_NAMES = {
    1: "Left",
    2: "Right",
    3: "LeftOverlap",
    4: "StrongLeftOverlap",
    5: "TwoSidedLeftOverlap",
    6: "PrefixOnlyLeftOverlap",
    7: "SubwordFreeLeftOverlap",
    8: "RightOverlap",
    9: "StrongRightOverlap",
    10: "TwoSidedRightOverlap",
    11: "SuffixOnlyRightOverlap",
    12: "SubwordFreeRightOverlap",
}

# right-handed local kinds and the left-handed kind they mirror
_MIRROR = {2: 1, 8: 3, 9: 4, 10: 5, 11: 6, 12: 7}


class InvolutiveDivision:
    __slots__ = ("key",)

    def __init__(self, key):
        key = int(key)
        if key not in DIVISION_NAMES:
            raise ValueError(f"division key must be 1..12, got {key}")
        self.key = key

    @property
    def name(self):
        return DIVISION_NAMES[self.key]

    @property
    def is_global(self):
        return self.key in (1, 2)

    @property
    def left_handed(self):
        return self.key not in _MIRROR

    def __eq__(self, other):
        return isinstance(other, InvolutiveDivision) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"InvolutiveDivision({self.key}: {self.name})"


class MultiplicativeTable:
    """Per basis element: the left- and right-multiplicative generator sets.

    Rows are aligned with the lead-monomial list the table was built
    from.  ``sets_for`` looks a row up by word (first match)."""

    __slots__ = ("division", "alphabet", "lms", "left", "right")

    def __init__(self, division, alphabet, lms, left, right):
        self.division = division
        self.alphabet = alphabet
        self.lms = list(lms)
        self.left = [frozenset(s) for s in left]
        self.right = [frozenset(s) for s in right]

    def row(self, idx):
        return self.left[idx], self.right[idx]

    def sets_for(self, word):
        word = tuple(word)
        for idx, lm in enumerate(self.lms):
            if lm == word:
                return self.left[idx], self.right[idx]
        raise KeyError(f"word {word} is not a lead monomial of this table")

    def nonmult_left(self, idx):
        return frozenset(range(len(self.alphabet))) - self.left[idx]

    def nonmult_right(self, idx):
        return frozenset(range(len(self.alphabet))) - self.right[idx]

    def named(self):
        """{word: (left names, right names)} with human-readable sets."""
        name = self.alphabet.name
        return {
            lm: (frozenset(name(g) for g in self.left[idx]),
                 frozenset(name(g) for g in self.right[idx]))
            for idx, lm in enumerate(self.lms)
        }


def _degrevlex_key(word):
    return (len(word), word[::-1])


def assign_multiplicative(division, lms, alphabet):
    """Build the multiplicative table for the given lead monomials.

    Local divisions internally sort the monomials descending by
    DegRevLex (stable), so the result is invariant under permutation of
    the input; rows come back aligned with the input order.
    """
    lms = [tuple(m) for m in lms]
    n = len(alphabet)
    everything = set(range(n))
    m = len(lms)

    if division.key == 1:    # Left: all left multiplicative, no right
        left = [set(everything) for _ in lms]
        right = [set() for _ in lms]
        return MultiplicativeTable(division, alphabet, lms, left, right)
    if division.key == 2:    # Right: mirror of Left
        left = [set() for _ in lms]
        right = [set(everything) for _ in lms]
        return MultiplicativeTable(division, alphabet, lms, left, right)

    if not division.left_handed:
        mirrored = assign_multiplicative(
            InvolutiveDivision(_MIRROR[division.key]),
            [w[::-1] for w in lms], alphabet)
        return MultiplicativeTable(division, alphabet, lms,
                                   mirrored.right, mirrored.left)

    order = sorted(range(m), key=lambda t: _degrevlex_key(lms[t]), reverse=True)
    u = [lms[t] for t in order]
    left = [set(everything) for _ in u]
    right = [set(everything) for _ in u]

    if division.key == 3:
        _left_overlap_rules(u, left, right)
    elif division.key == 4:
        _left_overlap_rules(u, left, right)
        _disjoint_cones(u, right)
    elif division.key == 5:
        _two_sided_rules(u, left, right)
    elif division.key == 6:
        _prefix_rule(u, right)
        _edge_overlap_rules(u, right)
    elif division.key == 7:
        _edge_overlap_rules(u, right)

    out_left = [None] * m
    out_right = [None] * m
    for slot, t in enumerate(order):
        out_left[t] = left[slot]
        out_right[t] = right[slot]
    return MultiplicativeTable(division, alphabet, lms, out_left, out_right)


def _edge_overlap_rules(u, right):
    """Proper prefix-of/suffix-of matches between distinct ends of two
    monomials (including self overlaps) knock out right-multiplicative
    letters; shared by all the one-sided left overlap divisions."""
    for a in range(len(u)):
        for b in range(a, len(u)):
            ua, ub = u[a], u[b]
            alpha, beta = len(ua), len(ub)
            for k in range(1, beta):
                if ua[:k] == ub[beta - k:]:         # PRE(ua,k) == SUFF(ub,k)
                    if k < alpha:
                        right[b].discard(ua[k])     # letter k+1 of ua
                if ua[alpha - k:] == ub[:k]:        # SUFF(ua,k) == PRE(ub,k)
                    right[a].discard(ub[k])         # letter k+1 of ub

def _left_overlap_rules(u, left, right):
    # subword matches (strict: ub may not be a suffix of ua) ...
    for a in range(len(u)):
        for b in range(len(u)):
            if a == b:
                continue
            if b < a:
                continue
            ua, ub = u[a], u[b]
            alpha, beta = len(ua), len(ub)
            for k in range(1, alpha - beta + 1):    # k < alpha - beta + 1
                if ua[k - 1:k - 1 + beta] == ub:
                    right[b].discard(ua[k + beta - 1])
    # ... plus the shared end-overlap rules
    _edge_overlap_rules(u, right)


def _disjoint_cones(u, right):
    """Ensure every monomial contains a right-nonmultiplicative letter of
    every other; runs back-to-front and reads the table as it mutates."""
    for a in range(len(u) - 1, -1, -1):
        for b in range(len(u) - 1, -1, -1):
            if all(letter in right[a] for letter in u[b]):
                right[a].discard(u[b][0])


def _two_sided_rules(u, left, right):
    for a in range(len(u)):
        for b in range(a, len(u)):
            ua, ub = u[a], u[b]
            alpha, beta = len(ua), len(ub)
            if a != b:
                for k in range(1, alpha - beta + 2):    # k <= alpha - beta + 1
                    if ua[k - 1:k - 1 + beta] == ub:
                        if k < alpha - beta + 1:
                            right[b].discard(ua[k + beta - 1])
                        elif k >= 2:    # ub is a suffix of ua
                            left[b].discard(ua[k - 2])  # letter k-1 of ua
            for k in range(1, beta):
                if ua[:k] == ub[beta - k:]:
                    xl, xr = ub[beta - k - 1], ua[k]
                    if xl in left[a] and xr in right[b]:
                        right[b].discard(xr)
                if ua[alpha - k:] == ub[:k]:
                    xr, xl = ub[k], ua[alpha - k - 1]
                    if xr in right[a] and xl in left[b]:
                        left[b].discard(xl)


def _prefix_rule(u, right):
    for a in range(len(u)):
        for b in range(len(u)):
            if a == b:
                continue
            ua, ub = u[a], u[b]
            if len(ub) < len(ua) and ua[:len(ub)] == ub:
                right[b].discard(ua[len(ub)])


# ---------------------------------------------------------------------------
# Involutive divisibility
# ---------------------------------------------------------------------------

def _placement(u2, u1, left, right, mode):
    d2, d1 = len(u2), len(u1)
    for s in range(d1 - d2 + 1):    # smallest left cofactor first
        if u1[s:s + d2] != u2:
            continue
        u3, u4 = u1[:s], u1[s + d2:]
        if mode == "thin":
            if u3 and u3[-1] not in left:
                continue
            if u4 and u4[0] not in right:
                continue
        else:
            if any(x not in left for x in u3):
                continue
            if any(x not in right for x in u4):
                continue
        return u3, u4
    return None


def involutively_divides(u2, u1, table, mode="thin"):
    """The admitted placement u1 = u3 * u2 * u4 with minimal-degree u3,
    or None.  ``mode`` selects thin or thick divisors."""
    if mode not in ("thin", "thick"):
        raise ValueError(f"mode must be 'thin' or 'thick', got {mode!r}")
    u2, u1 = tuple(u2), tuple(u1)
    left, right = table.sets_for(u2)
    return _placement(u2, u1, left, right, mode)


def fast_inv_divides_global(u2, u1, side):
    """Global-division divisibility in one comparison: Left division means
    u2 divides u1 exactly when u2 is a suffix of u1; Right means prefix."""
    u2, u1 = tuple(u2), tuple(u1)
    d2, d1 = len(u2), len(u1)
    if d2 > d1:
        return None
    if side == "left":
        if u1[d1 - d2:] == u2:
            return u1[:d1 - d2], ()
        return None
    if side == "right":
        if u1[:d2] == u2:
            return (), u1[d2:]
        return None
    raise ValueError("side must be 'left' or 'right' (global divisions only)")


def overlap_skip_reduction(u, lm, right_nonmult):
    """Initial 1-based scan offset for thick-divisor reduction under a
    one-sided left overlap division: any placement starting earlier would
    trap a right-nonmultiplicative letter inside the right cofactor."""
    last = None
    for pos in range(len(u), 0, -1):
        if u[pos - 1] in right_nonmult:
            last = pos
            break
    if last is None:
        return 1
    return max(1, last - len(lm) + 1)


# ---------------------------------------------------------------------------
# Involutive reduction
# ---------------------------------------------------------------------------

_LEFT_ONE_SIDED = frozenset((3, 4, 6, 7))


def _find_divisor(u, lms, table, mode, active):
    """First basis element (in ``active`` order) whose lead monomial
    involutively divides u, with its placement."""
    key = table.division.key
    for j in active:
        lmj = lms[j]
        if len(lmj) > len(u):
            continue
        if key == 1:
            if u[len(u) - len(lmj):] == lmj:
                return j, u[:len(u) - len(lmj)], ()
            continue
        if key == 2:
            if u[:len(lmj)] == lmj:
                return j, (), u[len(lmj):]
            continue
        left, right = table.left[j], table.right[j]
        if mode == "thick" and key in _LEFT_ONE_SIDED:
            start = overlap_skip_reduction(
                u, lmj, table.nonmult_right(j)) - 1
            hit = _placement(lmj, u[start:] if start else u, left, right, mode)
            if hit is not None:
                u3, u4 = hit
                return j, u[:start] + u3, u4
            continue
        hit = _placement(lmj, u, left, right, mode)
        if hit is not None:
            return j, hit[0], hit[1]
    return None


def inv_divide(p, P, table, ordering=None, mode="thin", active=None, stats=None):
    """Involutive remainder of p modulo P, with its log over P.

    Same shape as conventional division, but a term is reducible only by
    an involutive divisor.  ``active`` restricts which basis elements may
    divide (the table always describes all of P)."""
    if ordering is None:
        ordering = p.ordering
    if active is None:
        active = range(len(P))
    work = p.with_ordering(ordering)
    lms = [q.lm() for q in P]
    rem_terms = []
    log = []
    while not work.is_zero():
        u = work.lm()
        hit = _find_divisor(u, lms, table, mode, active)
        if hit is None:
            rem_terms.append(work.lt())
            work = Polynomial(work.terms[1:], work.alphabet, ordering, _trusted=True)
            continue
        j, u3, u4 = hit
        coeff = work.lc() / P[j].lc()
        lterm, rterm = Term(coeff, u3), Term(Fraction(1), u4)
        work = poly_combine(work, term_mul_poly(lterm, P[j], rterm), -1)
        log.append((lterm, j, rterm))
        if stats is not None:
            stats["inv_reductions"] = stats.get("inv_reductions", 0) + 1
    remainder = Polynomial(tuple(rem_terms), p.alphabet, ordering, _trusted=True)
    return remainder, tuple(log)


# ---------------------------------------------------------------------------
# Autoreduction
# ---------------------------------------------------------------------------

def autoreduce(P, division, ordering, mode="thin", logs=None, stats=None):
    """Repeatedly replace any p_i that is involutively reducible by the
    rest, until stable.  The table is always built from the full current
    set; the divisors are the set without p_i.  Zero reductions drop the
    element.  Returns (basis, logs); logs is None unless provided."""
    basis = [p.with_ordering(ordering) for p in P if not p.is_zero()]
    logs = list(logs) if logs is not None else None
    alphabet = ordering.alphabet
    changed = True
    while changed:
        changed = False
        if not basis:
            break
        table = assign_multiplicative(division, [p.lm() for p in basis], alphabet)
        for i in range(len(basis)):
            others = [j for j in range(len(basis)) if j != i]
            if not others:
                continue
            rem, dlog = inv_divide(basis[i], basis, table, ordering, mode,
                                   active=others, stats=stats)
            if rem == basis[i]:
                continue
            if logs is not None:
                used = [log_scale(log_conjugate(l, logs[k], r), -1)
                        for l, k, r in dlog]
                new_log = log_merge(logs[i], *used)
            if rem.is_zero():
                del basis[i]
                if logs is not None:
                    del logs[i]
            else:
                basis[i] = rem
                if logs is not None:
                    logs[i] = new_log
            changed = True
            break
    return basis, logs


# ---------------------------------------------------------------------------
# The Involutive Basis algorithm
# ---------------------------------------------------------------------------

@dataclass
class InvolutiveBasisResult:
    basis: list
    table: MultiplicativeTable
    logs: Optional[list]
    stats: dict = field(default_factory=dict)
    status: str = "complete"


def involutive_basis(F, division, ordering, mode="thin",
                     max_degree=DEFAULT_MAX_DEGREE,
                     max_iterations=DEFAULT_MAX_ITERATIONS, logged=False):
    """Compute a Locally Involutive Basis (in the case of termination).

    Autoreduce; then repeatedly reduce the prolongation with minimal lead
    monomial (ties: element index, then left before right).  A nonzero
    remainder joins the basis, which is autoreduced again and all
    prolongations recomputed; the run completes when every prolongation
    reduces to zero.  All twelve divisions are continuous and Gröbner, so
    a complete result is an Involutive Basis and a Gröbner Basis."""
    if not ordering.admissible:
        raise ValueError(f"ordering {ordering.kind} is not admissible")
    if mode not in ("thin", "thick"):
        raise ValueError(f"mode must be 'thin' or 'thick', got {mode!r}")
    if not isinstance(division, InvolutiveDivision):
        division = InvolutiveDivision(division)
    alphabet = ordering.alphabet
    basis = [f.with_ordering(ordering) for f in F if not f.is_zero()]
    if not basis:
        raise ValueError("input basis has no nonzero polynomials")
    logs = [log_identity(k) for k in range(len(basis))] if logged else None
    stats = {"prolongations": 0, "inv_reductions": 0, "basis_changes": 0}
    basis, logs = autoreduce(basis, division, ordering, mode, logs, stats)
    status = "complete"

    while True:
        table = assign_multiplicative(division, [p.lm() for p in basis], alphabet)
        queue = []
        for idx in range(len(basis)):
            lm = basis[idx].lm()
            for x in sorted(table.nonmult_left(idx)):
                queue.append((ordering.key((x,) + lm), idx, 0, x))
            for x in sorted(table.nonmult_right(idx)):
                queue.append((ordering.key(lm + (x,)), idx, 1, x))
        queue.sort()
        grew = False
        for _, idx, side, x in queue:
            if stats["prolongations"] >= max_iterations:
                status = "iteration_cap_hit"
                break
            stats["prolongations"] += 1
            if side == 0:
                s = term_mul_poly(Term(Fraction(1), (x,)), basis[idx], Term(Fraction(1), ()))
            else:
                s = term_mul_poly(Term(Fraction(1), ()), basis[idx], Term(Fraction(1), (x,)))
            rem, dlog = inv_divide(s, basis, table, ordering, mode, stats=stats)
            if rem.is_zero():
                continue
            if len(rem.lm()) > max_degree:
                status = "degree_cap_hit"
                break
            if logged:
                if side == 0:
                    s_log = log_conjugate(Term(Fraction(1), (x,)), logs[idx],
                                          Term(Fraction(1), ()))
                else:
                    s_log = log_conjugate(Term(Fraction(1), ()), logs[idx],
                                          Term(Fraction(1), (x,)))
                used = [log_scale(log_conjugate(l, logs[k], r), -1)
                        for l, k, r in dlog]
                logs.append(log_merge(s_log, *used))
            basis.append(rem)
            stats["basis_changes"] += 1
            basis, logs = autoreduce(basis, division, ordering, mode, logs, stats)
            grew = True
            break
        if status != "complete":
            break
        if not grew:
            break  # every prolongation reduced to zero

    table = assign_multiplicative(division, [p.lm() for p in basis], alphabet)
    stats["basis_size"] = len(basis)
    return InvolutiveBasisResult(basis=basis, table=table, logs=logs,
                                 stats=stats, status=status)

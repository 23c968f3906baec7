"""Overlaps between lead monomials, S-polynomials, and the second criterion.

There is no analogue of Buchberger's first criterion here: an
S-polynomial only exists where two lead monomials genuinely overlap
inside one word, so non-overlapping placements never generate work.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .algebra import Term, poly_combine, term_mul_poly


@dataclass(frozen=True)
class OverlapSpec:
    """A placement of two lead monomials sharing an overlap word.

    l1 * LM(g_i) * r1 == l2 * LM(g_j) * r2 == overlap_word, where at least
    one of l1, l2 and at least one of r1, r2 is the unit.  Prefix kind
    means a prefix of the first word equals a suffix of the second;
    suffix is the mirror; containment either way counts as subword.
    """

    i: int
    j: int
    l1: tuple
    r1: tuple
    l2: tuple
    r2: tuple
    kind: str
    overlap_word: tuple

    def with_indices(self, i, j):
        return replace(self, i=i, j=j)


def enumerate_overlaps(u1, u2, same_element, i=0, j=1):
    """All overlap placements of u2 against u1.

    Scans every shift of u2 relative to u1 that shares at least one
    letter position.  When ``same_element`` the identical placement
    (l1 == l2) is excluded, leaving only genuine self overlaps.
    """
    u1, u2 = tuple(u1), tuple(u2)
    d1, d2 = len(u1), len(u2)
    if d1 == 0 or d2 == 0:
        raise ValueError("overlaps are only defined for nonempty words")
    specs = []
    for s in range(-(d2 - 1), d1):
        lo, hi = max(0, s), min(d1, s + d2)
        if u1[lo:hi] != u2[lo - s:hi - s]:
            continue
        if 0 <= s and s + d2 <= d1:          # u2 inside u1
            l1, r1 = (), ()
            l2, r2 = u1[:s], u1[s + d2:]
            kind = "subword"
        elif s <= 0 and s + d2 >= d1:        # u1 inside u2
            l1, r1 = u2[:-s] if s else (), u2[d1 - s:]
            l2, r2 = (), ()
            kind = "subword"
        elif s < 0:                          # u2 hangs off the left
            l1, r1 = u2[:-s], ()
            l2, r2 = (), u1[s + d2:]
            kind = "prefix"
        else:                                # u2 hangs off the right
            l1, r1 = (), u2[d1 - s:]
            l2, r2 = u1[:s], ()
            kind = "suffix"
        if same_element and l1 == l2:
            continue
        specs.append(OverlapSpec(i, j, l1, r1, l2, r2, kind, l1 + u1 + r1))
    return specs


def s_polynomial(spec, p1, p2):
    """LC(p2) * l1 * p1 * r1  -  LC(p1) * l2 * p2 * r2.

    The placement must match the polynomials' actual lead monomials;
    the lead terms then cancel by construction.
    """
    if spec.l1 + p1.lm() + spec.r1 != spec.overlap_word:
        raise ValueError("overlap placement does not match LM(p1)")
    if spec.l2 + p2.lm() + spec.r2 != spec.overlap_word:
        raise ValueError("overlap placement does not match LM(p2)")
    left = term_mul_poly(Term(p2.lc(), spec.l1), p1, Term(1, spec.r1))
    right = term_mul_poly(Term(p1.lc(), spec.l2), p2, Term(1, spec.r2))
    return poly_combine(left, right, -1)


def settled_key(spec):
    """Canonical bookkeeping key for an overlap: participant indices in
    ascending order plus the left cofactor of the smaller-index element."""
    if spec.i < spec.j:
        return (spec.i, spec.j, spec.l1)
    if spec.j < spec.i:
        return (spec.j, spec.i, spec.l2)
    return (spec.i, spec.j, min(spec.l1, spec.l2))


def criterion2_applies(spec, basis, settled):
    """Buchberger's second criterion.

    True iff some basis lead monomial divides the overlap word at a
    placement distinct from both participants, such that every induced
    overlap S-polynomial is already settled (processed or known to
    reduce to zero).  Placements where the third monomial does not
    overlap a participant need no check at all: a non-overlapping pair
    of placements always reduces to zero.
    """
    w = spec.overlap_word
    own_key = settled_key(spec)
    participants = ((spec.i, spec.l1), (spec.j, spec.l2))
    for h_idx, h in enumerate(basis):
        uh = h.lm()
        dh = len(uh)
        for s in range(len(w) - dh + 1):
            if w[s:s + dh] != uh:
                continue
            l3 = w[:s]
            if any(h_idx == p_idx and l3 == lp for p_idx, lp in participants):
                continue  # this is one of the participants' own placements
            if _placement_admits_skip(spec, basis, h_idx, s, dh, settled, own_key):
                return True
    return False


def _placement_admits_skip(spec, basis, h_idx, s, dh, settled, own_key):
    w = spec.overlap_word
    for p_idx, lp, up in ((spec.i, spec.l1, basis[spec.i].lm()),
                          (spec.j, spec.l2, basis[spec.j].lm())):
        a0, a1 = len(lp), len(lp) + len(up)
        b0, b1 = s, s + dh
        if a1 <= b0 or b1 <= a0:
            continue  # disjoint as placed: reduces to zero regardless
        # l's are prefixes of w, r's are suffixes of w, so the maximal
        # common prefix/suffix is simply the shorter one
        cut_l = min(a0, b0)
        cut_r = min(len(w) - a1, len(w) - b1)
        lp_red, l3_red = w[cut_l:a0], w[cut_l:b0]
        induced = _induced_key(p_idx, lp_red, h_idx, l3_red)
        if induced == own_key or induced not in settled:
            return False
    return True


def _induced_key(i, l1, j, l2):
    if i < j:
        return (i, j, l1)
    if j < i:
        return (j, i, l2)
    return (i, j, min(l1, l2))

"""Batch front end and ideal-membership loop.

Problem files declare an alphabet and generators:

    # a comment
    vars: x > y > z
    ordering: deglex        (optional override of the default/flag)
    x*y - z
    y*z + 2*x + z

Results land next to the input as ``<stem>.<ord>.<alg>`` (for example
``demo.deg.inv``), one polynomial per line followed by ``# stats:``
footer lines, and the exit code reports how the run ended: 0 complete,
2 when a degree/iteration cap stopped it, 1 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys
import time

from .algebra import Alphabet, ParseError, format_polynomial, parse_polynomial
from .groebner import (DEFAULT_MAX_DEGREE, DEFAULT_MAX_ITERATIONS, divide,
                       mora, reduce_basis)
from .involutive import InvolutiveDivision, involutive_basis
from .orderings import MonomialOrdering
from .walk import WalkJob, groebner_walk, involutive_walk

ORDERING_ABBREV = {"deglex": "deg", "deginvlex": "dil", "degrevlex": "drl"}
ALGORITHM_ABBREV = {"groebner": "gb", "involutive": "inv",
                    "gwalk": "gwk", "iwalk": "iwk"}

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAP = 2


class ProblemFileError(ValueError):
    pass


def parse_problem_file(path):
    """Returns (alphabet, generator texts, ordering override or None)."""
    alphabet = None
    ordering = None
    generators = []
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if alphabet is None:
                if not line.startswith("vars:"):
                    raise ProblemFileError(
                        f"{path}:{lineno}: first directive must be "
                        "'vars: <name> > <name> > ...'")
                names = [part.strip() for part in line[5:].split(">")]
                if any(not name for name in names):
                    raise ProblemFileError(
                        f"{path}:{lineno}: malformed vars declaration")
                alphabet = Alphabet(names)
                continue
            if line.startswith("ordering:"):
                ordering = line[len("ordering:"):].strip()
                continue
            generators.append((lineno, line))
    if alphabet is None:
        raise ProblemFileError(f"{path}: missing 'vars:' declaration")
    if not generators:
        raise ProblemFileError(f"{path}: no generator polynomials")
    return alphabet, generators, ordering


def _parse_generators(path, alphabet, ordering, lines):
    out = []
    for lineno, text in lines:
        try:
            out.append(parse_polynomial(text, alphabet, ordering))
        except ParseError as exc:
            raise ProblemFileError(
                f"{path}:{lineno}:{exc.position}: {exc}") from exc
    return out


def build_arg_parser():
    parser = argparse.ArgumentParser(
        prog="ncpoly",
        description="Noncommutative Gröbner and Involutive Basis engine.")
    parser.add_argument("problem", help="problem file (vars: line plus generators)")
    parser.add_argument("--algorithm", choices=sorted(ALGORITHM_ABBREV),
                        default="groebner")
    parser.add_argument("--ordering", choices=sorted(ORDERING_ABBREV),
                        default=None,
                        help="monomial ordering (target ordering for walks); "
                             "default degrevlex unless the file overrides it")
    parser.add_argument("--source-ordering", choices=sorted(ORDERING_ABBREV),
                        default="degrevlex",
                        help="walks only: the ordering the walk starts from")
    parser.add_argument("--division", type=int, default=3, metavar="1..12",
                        help="involutive division key (default 3, LeftOverlap)")
    parser.add_argument("--divisors", choices=("thin", "thick"), default="thin")
    parser.add_argument("--strategy", choices=("normal", "sugar"),
                        default="normal")
    parser.add_argument("--no-criterion2", action="store_true",
                        help="disable Buchberger's second criterion")
    parser.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    parser.add_argument("--max-iterations", type=int,
                        default=DEFAULT_MAX_ITERATIONS)
    parser.add_argument("--membership", action="store_true",
                        help="after computing, answer ideal-membership "
                             "queries read from stdin ('quit' exits)")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    return parser


def _resolve_ordering(args, file_override, alphabet):
    kind = args.ordering or file_override or "degrevlex"
    try:
        return MonomialOrdering(kind, alphabet)
    except ValueError as exc:
        raise ProblemFileError(str(exc)) from exc


def run(args, out=None, err=None):
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        alphabet, gen_lines, file_ordering = parse_problem_file(args.problem)
        ordering = _resolve_ordering(args, file_ordering, alphabet)
        generators = _parse_generators(args.problem, alphabet, ordering,
                                       gen_lines)
    except (ProblemFileError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE

    if args.algorithm == "groebner" and args.verbose:
        # involutive-only options are ignored in this mode
        if args.division != 3 or args.divisors != "thin":
            print("warning: --division/--divisors are ignored with "
                  "--algorithm groebner", file=err)

    caps = {"max_degree": args.max_degree, "max_iterations": args.max_iterations}
    started = time.perf_counter()
    try:
        basis, stats, status = _dispatch(args, generators, ordering, caps)
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    elapsed = time.perf_counter() - started

    out_path = _output_path(args.problem, ordering.kind, args.algorithm)
    _write_output(out_path, alphabet, ordering, basis, stats, status, elapsed)
    if args.verbose:
        print(f"wrote {out_path} ({len(basis)} polynomials, status {status})",
              file=out)

    code = EXIT_OK if status == "complete" else EXIT_CAP
    if args.membership:
        if status != "complete":
            print("membership loop skipped: basis incomplete", file=err)
            return EXIT_CAP
        gb = reduce_basis(basis, ordering)
        membership_repl(gb, ordering, out=out, err=err)
    return code


def _dispatch(args, generators, ordering, caps):
    if args.algorithm == "groebner":
        result = mora(generators, ordering, strategy=args.strategy,
                      use_criterion2=not args.no_criterion2, **caps)
        return result.basis, result.stats, result.status
    if args.algorithm == "involutive":
        result = involutive_basis(generators, InvolutiveDivision(args.division),
                                  ordering, mode=args.divisors, **caps)
        return result.basis, result.stats, result.status
    # walks: compute the source basis first, then convert
    source = MonomialOrdering(args.source_ordering, ordering.alphabet)
    if args.algorithm == "gwalk":
        inner = mora([g.with_ordering(source) for g in generators], source,
                     strategy=args.strategy,
                     use_criterion2=not args.no_criterion2, **caps)
        if inner.status != "complete":
            return inner.basis, inner.stats, inner.status
        job = WalkJob(source=source, target=ordering, basis=inner.basis)
        walk = groebner_walk(job, **caps)
    else:
        division = InvolutiveDivision(args.division)
        inner = involutive_basis([g.with_ordering(source) for g in generators],
                                 division, source, mode=args.divisors, **caps)
        if inner.status != "complete":
            return inner.basis, inner.stats, inner.status
        job = WalkJob(source=source, target=ordering, basis=inner.basis,
                      division=division, mode=args.divisors)
        walk = involutive_walk(job, **caps)
    stats = dict(inner.stats)
    stats.update({f"walk_{k}": v for k, v in walk.stats.items()})
    return walk.basis, stats, walk.status


def _output_path(problem_path, ordering_kind, algorithm):
    stem = problem_path.rsplit(".", 1)[0] if "." in problem_path.rsplit("/", 1)[-1] \
        else problem_path
    return f"{stem}.{ORDERING_ABBREV[ordering_kind]}.{ALGORITHM_ABBREV[algorithm]}"


def _write_output(path, alphabet, ordering, basis, stats, status, elapsed):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("vars: " + " > ".join(alphabet.generators) + "\n")
        handle.write(f"ordering: {ordering.kind}\n")
        for p in basis:
            handle.write(format_polynomial(p) + "\n")
        handle.write(f"# stats: status={status}\n")
        handle.write(f"# stats: basis_size={len(basis)}\n")
        for key in ("prolongations", "inv_reductions", "spolys_considered",
                    "zero_reductions", "criterion2_skips", "iterations"):
            if key in stats:
                handle.write(f"# stats: {key}={stats[key]}\n")
        handle.write(f"# stats: wall_time={elapsed:.3f}s\n")


def membership_repl(reduced_gb, ordering, inp=None, out=None, err=None):
    """Answer one membership query per input line against a reduced basis.

    Prints 'member' for a zero remainder, otherwise 'non-member' with the
    remainder.  Parse errors are reported and the loop continues; 'quit'
    (or end of input) exits."""
    inp = inp if inp is not None else sys.stdin
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    alphabet = ordering.alphabet
    for raw in inp:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line == "quit":
            break
        try:
            p = parse_polynomial(line, alphabet, ordering)
        except ParseError as exc:
            print(f"error: {exc}", file=err)
            continue
        rem, _ = divide(p, reduced_gb, ordering) if not p.is_zero() else (p, ())
        if rem.is_zero():
            print("member", file=out)
        else:
            print(f"non-member, remainder: {format_polynomial(rem)}", file=out)


def main(argv=None):
    parser = build_arg_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    return run(args)


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Licensed under GNU General Public License v3.0

"""Command line front end.

Usage::

    basisdiv info ALGEBRA
    basisdiv ann ALGEBRA
    basisdiv ideal ALGEBRA ELEMENT
    basisdiv classify-basis ALGEBRA [--mode exhaustive|refute] [--bound B]
    basisdiv decompose ALGEBRA [--dot out.dot]
    basisdiv check-semisimple ALGEBRA [--all-bases]
    basisdiv check-simple ALGEBRA [--all-bases]
    basisdiv oracle ALGEBRA [--ideals | --semisimple | --simple]
    basisdiv fuzz --field F --dim N --trials T --seed S

ALGEBRA is the path of an algebra file or the name of a shipped example ("ex1", "sl2-F5", ...).
Every subcommand accepts --reduce P, --format text|json, --out FILE, --timings and -v/-vv.

Exit codes: 0 completed, 1 property refuted / NotSemisimple / NotSimple, 2 Inconclusive or
Unknown, 3 usage or input error.
"""

from basisdiv.algebra import AlgebraPresentation, annihilator, ideal_closure, reduce_mod
from basisdiv.field import FieldDescriptor
from basisdiv.inputs import corpus_names, load_corpus, parse_algebra_file, parse_element
from basisdiv.models.base_division import EXHAUSTIVE, REFUTE, DEFAULT_BOUND, UNKNOWN
from basisdiv.models.decomposition import (
    ALL_BASES, GIVEN_BASIS, NOT_SEMISIMPLE, NOT_SIMPLE, SEMISIMPLE, SIMPLE,
    check_semisimple_via_theorem, check_simple_via_corollary, decompose, to_dot,
)
from basisdiv.models.fuzz import run_fuzz
from basisdiv.models.idivision import check_i_division
from basisdiv.models.oracle import FuzzConfig, all_ideals, oracle_is_simple, semisimple_family
from basisdiv.models.profile import basis_profile
from basisdiv.models.semi import check_semi_division
from basisdiv.models.weak import check_weak_division
from basisdiv.report import JSON, TEXT, Report, emit_report, write_report

from smart_open import open

from pathlib import Path
from time import time

from typing import List, Optional, Tuple

import argparse
import logging
import sys

logger = logging.getLogger(__name__)

COMPLETED = 0
REFUTED = 1
INCONCLUSIVE = 2
USAGE_ERROR = 3

class ArgumentParser(argparse.ArgumentParser):
    """ Usage errors leave with exit code 3 """

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")

def parse_field(text:str) -> FieldDescriptor:
    """ "Q", "F5", "F_5", "Fp:5" or a bare prime "5" """
    raw = text.strip()
    if raw.upper() == "Q":
        return FieldDescriptor.rationals()
    for prefix in ("Fp:", "F_", "F"):
        if raw.startswith(prefix):
            raw = raw[len(prefix):]
            break
    try:
        p = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown field {text!r}; use Q or F<p>")
    try:
        return FieldDescriptor.prime_field(p)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))

def load_algebra(source:str, reduce:Optional[int]=None) -> AlgebraPresentation:
    """ Loads a file, falling back to the shipped examples for bare names """
    if not Path(source).exists() and source in corpus_names():
        A = load_corpus(source)
    else:
        A = parse_algebra_file(source)
    if reduce is not None:
        A = reduce_mod(A, reduce)
    return A

def build_parser() -> ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument("--format", choices=(TEXT, JSON), default=TEXT, help="report format")
    common.add_argument("--out", default=None, help="write the report to this file instead of stdout")
    common.add_argument("--timings", action="store_true", help="include wall-clock timings in the report")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logging")

    with_algebra = ArgumentParser(add_help=False, parents=[common])
    with_algebra.add_argument("algebra", help="algebra file or name of a shipped example")
    with_algebra.add_argument("--reduce", type=int, default=None, metavar="P", help="reduce a presentation over Q modulo the prime P")

    parser = ArgumentParser(prog="basisdiv", description="Exact semisimplicity and simplicity tests through division bases.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    sub.add_parser("info", parents=[with_algebra], help="presentation summary and basis profile")
    sub.add_parser("ann", parents=[with_algebra], help="annihilator")

    p = sub.add_parser("ideal", parents=[with_algebra], help="ideal generated by an element")
    p.add_argument("element", help="a basis label or label=scalar pairs, e.g. b1=1,b2=-1/2")

    p = sub.add_parser("classify-basis", parents=[with_algebra], help="weak-, semi- and i-division checks of the presentation basis")
    p.add_argument("--mode", choices=(EXHAUSTIVE, REFUTE), default=None, help="exhaustive over prime fields (default), refute otherwise")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="coordinate bound of the refutation search")

    p = sub.add_parser("decompose", parents=[with_algebra], help="connection levels and blocks")
    p.add_argument("--dot", default=None, metavar="FILE", help="export the connection graphs in DOT format")

    for name in ("check-semisimple", "check-simple"):
        p = sub.add_parser(name, parents=[with_algebra], help=f"{name[6:]} verdict through division bases")
        p.add_argument("--all-bases", action="store_true", help="search every basis (prime fields only)")
        p.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="coordinate bound of the refutation search over Q")

    p = sub.add_parser("oracle", parents=[with_algebra], help="brute-force ideal enumeration")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--ideals", action="store_true", help="list every ideal (default)")
    group.add_argument("--semisimple", action="store_true", help="decide semisimplicity")
    group.add_argument("--simple", action="store_true", help="decide simplicity")

    p = sub.add_parser("fuzz", parents=[common], help="differential tests against the oracle")
    p.add_argument("--field", type=parse_field, required=True, help="prime field, e.g. F2")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sparsity", type=float, default=0.5)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--counterexamples", default="counterexamples", metavar="DIR", help="directory for minimized counterexample files (default: counterexamples)")
    return parser

def _arguments(args:argparse.Namespace) -> dict:
    skip = {"command", "format", "out", "timings", "verbose"}
    out = {}
    for key, value in sorted(vars(args).items()):
        if key in skip:
            continue
        out[key] = str(value) if isinstance(value, FieldDescriptor) else value
    return out

def _cmd_info(A:AlgebraPresentation, args) -> Tuple[dict, int]:
    return {
        "field": str(A.field),
        "dim": A.dim,
        "basis": list(A.labels),
        "nonzero_products": len(A.products),
        "zero_product": A.is_zero_product(),
        "annihilator_rank": annihilator(A).rank,
        "profile": basis_profile(A).to_dict(A.labels),
    }, COMPLETED

def _cmd_ann(A:AlgebraPresentation, args) -> Tuple[dict, int]:
    ann = annihilator(A)
    return {"rank": ann.rank, "basis": ann.to_list(A.labels)}, COMPLETED

def _cmd_ideal(A:AlgebraPresentation, args) -> Tuple[dict, int]:
    x = parse_element(args.element, A)
    I = ideal_closure(A, [x])
    return {
        "element": x.to_dict(A.labels),
        "rank": I.rank,
        "basis": I.to_list(A.labels),
        "whole_algebra": I.is_full(),
    }, COMPLETED

def _cmd_classify_basis(A:AlgebraPresentation, args) -> Tuple[dict, int]:
    mode = args.mode or (EXHAUSTIVE if A.field.is_finite else REFUTE)
    profile = basis_profile(A)
    verdicts = {
        "weak": check_weak_division(A, profile=profile, mode=mode, bound=args.bound),
        "semi": check_semi_division(A, profile=profile, mode=mode, bound=args.bound),
        "i": check_i_division(A, mode=mode, bound=args.bound),
    }
    code = INCONCLUSIVE if any(v.status == UNKNOWN for v in verdicts.values()) else COMPLETED
    return {name: v.to_dict(A) for name, v in verdicts.items()}, code

def _cmd_decompose(A:AlgebraPresentation, args) -> Tuple[dict, int]:
    report = decompose(A)
    if args.dot is not None:
        with open(args.dot, "w", encoding="utf-8") as f:
            f.write(to_dot(report.levels, A.labels))
        logger.info(f"wrote connection graphs to {args.dot}")
    return report.to_dict(), COMPLETED

def _cmd_check_semisimple(A:AlgebraPresentation, args) -> Tuple[dict, int]:
    report = check_semisimple_via_theorem(A, ALL_BASES if args.all_bases else GIVEN_BASIS, bound=args.bound)
    code = {SEMISIMPLE: COMPLETED, NOT_SEMISIMPLE: REFUTED}.get(report.verdict, INCONCLUSIVE)
    return report.to_dict(), code

def _cmd_check_simple(A:AlgebraPresentation, args) -> Tuple[dict, int]:
    verdict = check_simple_via_corollary(A, ALL_BASES if args.all_bases else GIVEN_BASIS, bound=args.bound)
    code = {SIMPLE: COMPLETED, NOT_SIMPLE: REFUTED}.get(verdict.verdict, INCONCLUSIVE)
    return verdict.to_dict(), code

def _cmd_oracle(A:AlgebraPresentation, args) -> Tuple[dict, int]:
    if args.semisimple:
        family = semisimple_family(A)
        results = {"semisimple": family is not None}
        if family is not None:
            results["family"] = [I.to_list(A.labels) for I in family]
        return results, COMPLETED if family is not None else REFUTED
    if args.simple:
        simple = oracle_is_simple(A)
        return {"simple": simple}, COMPLETED if simple else REFUTED
    ideals = all_ideals(A)
    return {"count": len(ideals), "ideals": [I.to_list(A.labels) for I in ideals]}, COMPLETED

def _cmd_fuzz(args) -> Tuple[dict, int]:
    cfg = FuzzConfig(args.field, args.dim, sparsity=args.sparsity, seed=args.seed, trials=args.trials)
    summary = run_fuzz([cfg], workers=args.workers, out_dir=args.counterexamples)
    return summary.to_dict(), REFUTED if summary.mismatches else COMPLETED

COMMANDS = {
    "info": _cmd_info,
    "ann": _cmd_ann,
    "ideal": _cmd_ideal,
    "classify-basis": _cmd_classify_basis,
    "decompose": _cmd_decompose,
    "check-semisimple": _cmd_check_semisimple,
    "check-simple": _cmd_check_simple,
    "oracle": _cmd_oracle,
}

def run_command(cmd:str, args:argparse.Namespace) -> Report:
    """ Runs one subcommand on parsed arguments.

    Parameters
    ----------
    cmd : str
        Name of the subcommand.
    args : argparse.Namespace
        Arguments as produced by :func:`build_parser`.

    Returns
    -------
    :class:`~basisdiv.report.Report`
        Results with the exit code of the command.

    """
    start = time()
    if cmd == "fuzz":
        results, code = _cmd_fuzz(args)
    elif cmd in COMMANDS:
        A = load_algebra(args.algebra, args.reduce)
        results, code = COMMANDS[cmd](A, args)
    else:
        raise ValueError(f"unknown command {cmd!r}")
    timings = {"total": time() - start} if getattr(args, "timings", False) else None
    return Report(cmd, _arguments(args), results, exit_code=code, timings=timings)

def main(argv:List[str]=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(format='%(asctime)s : %(levelname)s : %(message)s', level=level)

    try:
        report = run_command(args.command, args)
    except (ValueError, TypeError, OSError) as e:
        sys.stderr.write(f"basisdiv: error: {e}\n")
        return USAGE_ERROR
    except RuntimeError as e:
        logger.critical(f"internal inconsistency: {e}")
        return USAGE_ERROR

    if args.out is not None:
        write_report(report, args.out, args.format)
    else:
        data = emit_report(report, args.format)
        buffer = getattr(sys.stdout, "buffer", None)
        if buffer is not None:
            buffer.write(data)
        else:
            sys.stdout.write(data.decode("utf-8"))
        sys.stdout.flush()
    return report.exit_code

if __name__ == "__main__":
    sys.exit(main())

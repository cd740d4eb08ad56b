"""
main.py

Command-line front end. Every subcommand prints plain text by default and a
canonical JSON document with ``--json``; logs and errors go to stderr.

Exit codes: 0 on success, 1 for usage, parse and field errors, 2 when a
mathematical check fails (reconstruction, separation, genericity cross-check
or a verify-family run with failures).
"""

from __future__ import annotations

import argparse
import cmath
import sys
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from rich.console import Console

from archimedean_converse import __version__
from archimedean_converse.auto_config.environment import config
from archimedean_converse.auto_config.logging_config import logger
from archimedean_converse.cli.grammar import (
    format_character,
    parse_character,
    parse_complex,
    parse_param,
)
from archimedean_converse.cli.serialization import (
    character_to_json,
    dumps,
    gamma_to_json,
    load_json,
    parameter_to_json,
    transcript_from_json,
    transcript_to_json,
    verdict_to_json,
)
from archimedean_converse.converse.families import verify_family
from archimedean_converse.converse.oracle import (
    ParameterOracle,
    RecordingOracle,
    SearchBounds,
    default_bounds,
    parse_grid,
)
from archimedean_converse.converse.reconstruct import reconstruct
from archimedean_converse.converse.separation import find_distinguishing_twist
from archimedean_converse.errors import (
    FieldMismatchError,
    GenericityMismatchError,
    ParameterError,
    ParseError,
    ReconstructionError,
    SearchExhaustedError,
    SingularEvaluationError,
)
from archimedean_converse.factors.genericity import genericity_cross_check, is_generic_comb
from archimedean_converse.factors.local_factors import (
    L_param,
    eps_param,
    gamma_param_direct,
    rankin_selberg_L,
)
from archimedean_converse.gamma.divisor import order_at
from archimedean_converse.gamma.expr import GammaExpr
from archimedean_converse.gamma.numeric import ge_eval
from archimedean_converse.parameters.constituents import Disc2R, Field
from archimedean_converse.parameters.llc import describe_llc
from archimedean_converse.parameters.parameter import (
    Parameter,
    dual,
    rankin_selberg,
    tensor_2x2,
    twist_gl1,
)
from archimedean_converse.utils.output_manager import save_output

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MATH = 2

USAGE_ERRORS = (ParseError, FieldMismatchError, ParameterError, SingularEvaluationError)
MATH_ERRORS = (ReconstructionError, SearchExhaustedError, GenericityMismatchError)

err_console = Console(stderr=True, highlight=False)


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; this tool reserves 2 for math failures."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


# ---------------------------------------------------------------- helpers

def _emit(args: argparse.Namespace, text: str, payload: Any) -> None:
    print(dumps(payload) if args.json else text)


def _format_complex(z: complex) -> str:
    return f"{z.real:.15g}{z.imag:+.15g}i"


def _evaluations(args: argparse.Namespace, exprs: Dict[str, GammaExpr]) -> Optional[Dict[str, Any]]:
    if args.eval is None:
        return None
    s = parse_complex(args.eval)
    values = {name: ge_eval(x, s) for name, x in exprs.items()}
    for name, z in values.items():
        if not cmath.isfinite(z):
            raise ParameterError(f"{name}({_format_complex(s)}) does not fit in a double")
    return {
        "s": [s.real, s.imag],
        "values": {name: [z.real, z.imag] for name, z in values.items()},
        "text": [f"{name}({_format_complex(s)}) = {_format_complex(z)}" for name, z in values.items()],
    }


def _with_evaluations(args, lines: List[str], payload: Dict[str, Any], exprs: Dict[str, GammaExpr]) -> None:
    evaluated = _evaluations(args, exprs)
    if evaluated is None:
        return
    lines.extend(evaluated.pop("text"))
    payload["eval"] = evaluated


def _covering_bounds(args: argparse.Namespace, params: Iterable[Parameter]) -> SearchBounds:
    """
    Search bounds from --maxN/--tgrid, falling back to the configured defaults
    widened so that every given parameter lies inside the box.
    """
    params = list(params)
    base = default_bounds()
    max_n = args.max_n if args.max_n is not None else max(
        [base.max_n, *(abs(getattr(c, "N", 0)) for p in params for c in p)]
    )
    grid = parse_grid(args.tgrid) if args.tgrid else (
        *base.t_grid, *(c.t for p in params for c in p)
    )
    return SearchBounds.create(max_n, grid, args.max_twist_offset)


def _single_phi(text: str) -> Disc2R:
    p = parse_param(text if ":" in text else f"R: {text}")
    if p.field is not Field.REAL or len(p) != 1 or not isinstance(p.constituents[0], Disc2R):
        raise ParameterError(f"expected a single phi(a, t), got {text!r}")
    return p.constituents[0]


# ---------------------------------------------------------------- commands

def cmd_config(args: argparse.Namespace) -> int:
    lines = config.describe()
    _emit(args, "\n".join(lines), {"config": lines})
    return EXIT_OK


def cmd_factor(args: argparse.Namespace) -> int:
    p = parse_param(args.param)
    exprs = {"L": L_param(p), "eps": eps_param(p), "gamma": gamma_param_direct(p)}
    lines = [str(p)] + [f"{name}(s) = {x}" for name, x in exprs.items()]
    payload: Dict[str, Any] = {"parameter": parameter_to_json(p)}
    payload.update({name: gamma_to_json(x) for name, x in exprs.items()})
    _with_evaluations(args, lines, payload, exprs)
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def cmd_generic(args: argparse.Namespace) -> int:
    p = parse_param(args.param)
    genericity_cross_check(p)
    verdict = is_generic_comb(p)
    text = "generic" if verdict.generic else f"not generic\nwitness: {verdict.witness}"
    _emit(args, text, {"parameter": parameter_to_json(p), **verdict_to_json(verdict)})
    return EXIT_OK


def _print_parameter(args: argparse.Namespace, p: Parameter) -> int:
    _emit(args, str(p), parameter_to_json(p))
    return EXIT_OK


def cmd_twist(args: argparse.Namespace) -> int:
    return _print_parameter(args, twist_gl1(parse_param(args.param), parse_character(args.char)))


def cmd_tensor(args: argparse.Namespace) -> int:
    return _print_parameter(args, tensor_2x2(_single_phi(args.first), _single_phi(args.second)))


def cmd_dual(args: argparse.Namespace) -> int:
    return _print_parameter(args, dual(parse_param(args.param)))


def cmd_rankin(args: argparse.Namespace) -> int:
    p = parse_param(args.param)
    rs = rankin_selberg(p)
    L = rankin_selberg_L(p)
    pole = max(0, order_at(L, 1))
    lines = [f"p x p^v = {rs}", f"L(s, p x p^v) = {L}", f"pole order at s=1: {pole}"]
    payload: Dict[str, Any] = {
        "parameter": parameter_to_json(p),
        "tensor": parameter_to_json(rs),
        "L": gamma_to_json(L),
        "poleOrderAt1": pole,
    }
    _with_evaluations(args, lines, payload, {"L": L})
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def cmd_llc(args: argparse.Namespace) -> int:
    p = parse_param(args.param)
    text = describe_llc(p)
    _emit(args, text, {"parameter": parameter_to_json(p), "description": text.splitlines()})
    return EXIT_OK


def cmd_distinguish(args: argparse.Namespace) -> int:
    p, q = parse_param(args.first), parse_param(args.second)
    bounds = _covering_bounds(args, (p, q))
    chi = find_distinguishing_twist(p, q, bounds)
    _emit(args, format_character(chi), {"equal": chi is None, "character": character_to_json(chi)})
    return EXIT_OK


def cmd_reconstruct(args: argparse.Namespace) -> int:
    oracle, recorded = transcript_from_json(load_json(args.transcript))
    bounds = recorded
    if bounds is None or args.max_n is not None or args.tgrid:
        bounds = _covering_bounds(args, ())
    p = reconstruct(oracle, bounds)
    return _print_parameter(args, p)


def cmd_transcript(args: argparse.Namespace) -> int:
    p = parse_param(args.param)
    bounds = _covering_bounds(args, (p,))
    oracle = RecordingOracle(ParameterOracle(p))
    rebuilt = reconstruct(oracle, bounds)
    if rebuilt != p:
        raise ReconstructionError(f"reconstruction returned {rebuilt} instead of {p}")
    payload = transcript_to_json(p.field, oracle.transcript, bounds)
    if args.save:
        save_output(payload, "transcripts", args.save)
    print(dumps(payload))
    return EXIT_OK


def cmd_verify_family(args: argparse.Namespace) -> int:
    field = Field(args.field)
    base = default_bounds()
    bounds = SearchBounds.create(
        args.max_n if args.max_n is not None else base.max_n,
        parse_grid(args.tgrid) if args.tgrid else base.t_grid,
        args.max_twist_offset,
    )
    report = verify_family(field, args.nmax, bounds, max_workers=args.workers)
    payload = report.to_dict()
    if args.save:
        save_output(payload, "reports", args.save)
    _emit(args, "\n".join(report.summary_lines()), payload)
    return EXIT_OK if report.ok else EXIT_MATH


# ---------------------------------------------------------------- parser

def _add_bounds(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--maxN", dest="max_n", type=int, default=None,
                        help="largest |N| in the search box")
    parser.add_argument("--tgrid", default=None, help="comma-separated t values, e.g. 0,1/2,1")
    parser.add_argument("--max-twist-offset", dest="max_twist_offset", type=int, default=None,
                        help="largest twist offset tried by the separation search")


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print canonical JSON")
    common.add_argument("--eval", metavar="s=<complex>", default=None, type=_eval_point,
                        help="also evaluate the printed expressions numerically")

    parser = _ArgumentParser(
        prog="archimedean-converse",
        description="Archimedean local factors, genericity and the local converse theorem",
    )
    parser.add_argument("-v", "--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_ArgumentParser)
    sub.required = True

    def add(name: str, func: Callable[[argparse.Namespace], int], summary: str,
            positionals: Sequence[Tuple[str, str]] = ()) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=summary, description=summary)
        for dest, text in positionals:
            p.add_argument(dest, help=text)
        p.set_defaults(func=func)
        return p

    add("config", cmd_config, "show the active configuration")
    add("factor", cmd_factor, "L, epsilon and gamma factors of a parameter", [("param", "parameter")])
    add("generic", cmd_generic, "genericity verdict with a witness", [("param", "parameter")])
    add("twist", cmd_twist, "twist a parameter by a character",
        [("param", "parameter"), ("char", "chi(a, t) or lambda(e, t)")])
    add("tensor", cmd_tensor, "tensor product of two phi's",
        [("first", "phi(a, t)"), ("second", "phi(a, t)")])
    add("dual", cmd_dual, "contragredient parameter", [("param", "parameter")])
    add("rankin", cmd_rankin, "p x p^v and its L-factor", [("param", "parameter")])
    add("llc", cmd_llc, "Langlands quotient description", [("param", "parameter")])
    _add_bounds(add("distinguish", cmd_distinguish, "find a twist separating two parameters",
                    [("first", "parameter"), ("second", "parameter")]))
    _add_bounds(add("reconstruct", cmd_reconstruct, "rebuild a parameter from a transcript file",
                    [("transcript", "transcript JSON file")]))
    transcript = add("transcript", cmd_transcript, "record the queries reconstruction makes",
                     [("param", "parameter")])
    _add_bounds(transcript)
    transcript.add_argument("--save", metavar="NAME", default=None,
                            help="also write the transcript to OUTPUT_DIR/transcripts/NAME.json")

    family = add("verify-family", cmd_verify_family, "check the converse statements over a family")
    family.add_argument("--field", choices=[f.value for f in Field], required=True)
    family.add_argument("--nmax", type=int, required=True, help="largest dimension")
    _add_bounds(family)
    family.add_argument("--workers", type=int, default=None, help="thread pool size")
    family.add_argument("--save", metavar="NAME", default=None,
                        help="also write the report to OUTPUT_DIR/reports/NAME.json")
    return parser


def _eval_point(text: str) -> str:
    if not text.startswith("s="):
        raise argparse.ArgumentTypeError(f"expected s=<complex>, got {text!r}")
    return text[2:]


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, run one subcommand and return its exit status."""
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        err_console.print(str(e), markup=False)
        return EXIT_USAGE
    logger.debug(f"Running {args.command}")
    try:
        return args.func(args)
    except ParseError as e:
        err_console.print(f"parse error: {e.message}", markup=False)
        err_console.print(e.caret(), markup=False)
        return EXIT_USAGE
    except USAGE_ERRORS as e:
        err_console.print(f"error: {e}", markup=False)
        return EXIT_USAGE
    except MATH_ERRORS as e:
        logger.error(f"{args.command} failed: {e}")
        err_console.print(f"failed: {e}", markup=False)
        return EXIT_MATH


def main() -> None:
    sys.exit(run())

#!/usr/bin/env python3

import argparse
import logging
import sys
from typing import Dict, List, Optional, Union

from triangle_density.config import Config
from triangle_density.errors import InvalidArgumentException
from triangle_density.models import ExitStatus, RunConfig, TriangleSignature
from triangle_density.runner_factory import build_runner

log = logging.getLogger(__name__)

COMMAND = "command"


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", dest="output_format", choices=RunConfig.formats, default="csv",
                        help="Table format of the data output")
    parser.add_argument("--out", type=str, default=None, help="Write the report here instead of standard output")
    parser.add_argument("--cache-dir", type=str, default=None,
                        help="Prime table cache directory (default: $%s or %s)"
                             % (Config.cache_env_var, Config.default_cache_dir))
    parser.add_argument("--plot", type=str, default=None, help="Also render the series to this figure file")
    parser.add_argument("-v", "--verbose", default=False, action="store_true", help="Log debug messages")


def _add_series(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--checkpoints", type=str, default=",".join(str(x) for x in Config.checkpoints),
                        help="Ascending comma-separated values of x")
    parser.add_argument("--delta", type=float, default=Config.delta, help="Threshold exponent offset in (0,1)")


def create_parser():
    arg_parser = argparse.ArgumentParser(
        description="Density experiments on the orders of finite quotients of triangle groups")
    subparsers = arg_parser.add_subparsers(dest=COMMAND, metavar="COMMAND")
    subparsers.required = True

    parser = subparsers.add_parser("kx-series", help="Density of K_x and its complement counts")
    parser.add_argument("--rst", type=str, required=True, help="Signature r,s,t")
    _add_series(parser)
    _add_common(parser)

    for name, help_text in (("tk-report", "Turan-Kubilius statistics of the P_x counting function"),
                            ("sx-series", "Density of S_x against the bad-integer count"),
                            ("complement-bound", "Size of the K_x complement against its measured bound")):
        parser = subparsers.add_parser(name, help=help_text)
        parser.add_argument("--rst", type=str, required=True, help="Signature r,s,t")
        _add_series(parser)
        parser.add_argument("--epsilon", type=float, default=Config.epsilon, help="Bad-integer cut exponent offset")
        if name == "tk-report":
            parser.add_argument("--margin", type=float, default=Config.tk_margin,
                                help="Accepted ratio of the variance sum to B(x)^2")
        _add_common(parser)

    parser = subparsers.add_parser("bertram-check", help="Exceptional set counts against their bounds")
    _add_series(parser)
    parser.add_argument("--c", dest="b3_constant", type=float, default=Config.b3_constant,
                        help="Constant of the smooth-divisor bound")
    _add_common(parser)

    parser = subparsers.add_parser("dirichlet-logsize", help="Logarithmic size of the primes in a residue class")
    _add_series(parser)
    parser.add_argument("--residue", type=int, default=1)
    parser.add_argument("--modulus", type=int, default=4)
    parser.add_argument("--truncated", default=False, action="store_true",
                        help="Only count primes above (log x)^(1+delta)")
    _add_common(parser)

    parser = subparsers.add_parser("quotient-orders", help="Orders of the finite quotients up to a bound")
    parser.add_argument("--rst", type=str, required=True, help="Signature r,s,t")
    parser.add_argument("--max-order", type=int, default=None, help="Largest order listed (default: --max-index)")
    parser.add_argument("--max-index", type=int, default=Config.max_index, help="Largest coset table degree")
    parser.add_argument("--budget", type=int, default=Config.search_budget, help="Search node cap")
    _add_common(parser)

    parser = subparsers.add_parser("cross-check", help="Arithmetic exclusions against enumerated quotient orders")
    parser.add_argument("--rst", type=str, required=True, help="Signature r,s,t")
    parser.add_argument("--x", type=int, required=True, help="Evaluation point of the K_x parameters")
    parser.add_argument("--delta", type=float, default=Config.delta, help="Threshold exponent offset in (0,1)")
    parser.add_argument("--max-n", type=int, required=True, help="Largest candidate order checked")
    parser.add_argument("--max-index", type=int, default=Config.max_index, help="Largest coset table degree")
    parser.add_argument("--budget", type=int, default=Config.search_budget, help="Search node cap")
    _add_common(parser)

    parser = subparsers.add_parser("euclidean-density", help="Density of the smooth quotient orders of (2,3,6) or (2,4,4)")
    parser.add_argument("--kind", type=str, required=True, help="2,3,6 or 2,4,4")
    parser.add_argument("--checkpoints", type=str, default=",".join(str(x) for x in Config.checkpoints),
                        help="Ascending comma-separated values of x")
    _add_common(parser)

    return arg_parser


def _parse_checkpoints(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise InvalidArgumentException("Checkpoints \"%s\" are not comma-separated integers" % text)


def build_config(arguments: Dict[str, Union[int, float, str, None]]) -> RunConfig:
    def signature(key: str) -> Optional[TriangleSignature]:
        return TriangleSignature.parse(arguments[key]) if arguments.get(key) is not None else None

    options = dict(command=arguments[COMMAND],
                   signature=signature("rst"),
                   kind=signature("kind"),
                   cache_dir=arguments["cache_dir"],
                   output_format=arguments["output_format"],
                   out=arguments["out"],
                   plot=arguments["plot"])
    if "checkpoints" in arguments:
        options["checkpoints"] = _parse_checkpoints(arguments["checkpoints"])
    for key in ("delta", "epsilon", "x", "max_n", "max_order", "max_index", "budget", "residue", "modulus",
                "truncated", "b3_constant", "margin"):
        if key in arguments:
            options[key] = arguments[key]
    return RunConfig(**options)


def validate_args(arguments: Dict[str, Union[int, float, str, None]]) -> bool:
    try:
        build_config(arguments).validate()
    except InvalidArgumentException as e:
        log.error(str(e))
        return False
    return True


if __name__ == '__main__':
    parser = create_parser()
    args = vars(parser.parse_args())

    logging.basicConfig(level=logging.DEBUG if args["verbose"] else logging.INFO, stream=sys.stderr,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")

    if not validate_args(args):
        log.error("Arguments validation error, exit.")
        sys.exit(ExitStatus.INVALID_ARGUMENT)

    runner = build_runner(args["cache_dir"])
    sys.exit(runner.run(build_config(args)))

"""
annulus-opt command line.

    annulus-opt solve --a 1 --b 3 --lambda 1.0
    annulus-opt sweep --a 1 --b 3 --lambda-grid 0.01:3:2000 --out table.csv
    annulus-opt beta-table --n-max 52
    annulus-opt render --a 1 --b 3 --lambda 0.25 --out triangle.svg
    annulus-opt certify --a 1 --b 3 --lambda-grid 0.01:3:200
    annulus-opt fuzz --n 10000 --seed 7 --witness-csv witnesses.csv
"""

import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from config.settings import EXIT_IO, EXIT_PARAMETER
from ..errors import AnnulusOptError
from .commands import cmd_beta_table, cmd_certify, cmd_fuzz, cmd_render, cmd_solve, cmd_sweep
from .config import Command, LambdaGrid, RunConfig

logger = logging.getLogger(__name__)

HANDLERS = {
    Command.SOLVE: cmd_solve,
    Command.SWEEP: cmd_sweep,
    Command.BETA_TABLE: cmd_beta_table,
    Command.RENDER: cmd_render,
    Command.CERTIFY: cmd_certify,
    Command.FUZZ: cmd_fuzz,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="annulus-opt",
        description="Minimize lambda*area - perimeter over convex sets between two concentric disks",
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", action="store_true", help="debug logging on stderr")
    verbosity.add_argument("--quiet", action="store_true", help="warnings only")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--out", dest="output_path", default=None, help="output file (stdout if omitted)")
        cmd.add_argument("--format", default=None, help="json, csv, svg or text")
        cmd.add_argument("--seed", type=int, default=0)
        return cmd

    def add_ring(cmd: argparse.ArgumentParser) -> None:
        cmd.add_argument("--a", type=float, default=None, help="inner radius")
        cmd.add_argument("--b", type=float, default=None, help="outer radius")

    solve_cmd = add("solve", "optimal body for one lambda")
    add_ring(solve_cmd)
    solve_cmd.add_argument("--lambda", dest="lam", type=float, default=None)
    solve_cmd.add_argument("--variant", choices=["ring", "inner", "outer"], default="ring",
                           help="both constraints, D_a only or D_b only")

    sweep_cmd = add("sweep", "regime table over a lambda grid")
    add_ring(sweep_cmd)
    sweep_cmd.add_argument("--lambda-grid", dest="lambda_grid", default=None, help="lo:hi:n")

    beta_cmd = add("beta-table", "transition constants beta_n and betahat_n")
    beta_cmd.add_argument("--n-max", dest="n_max", type=int, default=52)

    render_cmd = add("render", "SVG of the optimal body")
    add_ring(render_cmd)
    render_cmd.add_argument("--lambda", dest="lam", type=float, default=None)
    render_cmd.add_argument("--family-sample", dest="family_sample", type=int, default=0,
                            help="at lambda = 2/a also draw k members of the J = 0 family")

    certify_cmd = add("certify", "check analytic solutions against both oracles")
    add_ring(certify_cmd)
    certify_cmd.add_argument("--lambda", dest="lam", type=float, default=None)
    certify_cmd.add_argument("--lambda-grid", dest="lambda_grid", default=None, help="lo:hi:n")
    certify_cmd.add_argument("--oracle-budget", dest="oracle_budget", default=None, help="p:q:grid")
    certify_cmd.add_argument("--descent-m", dest="descent_m", type=int, default=None)
    certify_cmd.add_argument("--restarts", type=int, default=None)
    certify_cmd.add_argument("--skip-descent", dest="skip_descent", action="store_true")
    certify_cmd.add_argument("--solution", dest="solution_path", default=None,
                             help="certify a Solution JSON file instead of solving")
    certify_cmd.add_argument("--timings", action="store_true", help="include wall time per oracle")

    fuzz_cmd = add("fuzz", "inequality checks on random convex polygons")
    fuzz_cmd.add_argument("--n", dest="fuzz_n", type=int, default=1000)
    fuzz_cmd.add_argument("--witness-csv", dest="witness_csv", default=None)
    return parser


def run_config(args: argparse.Namespace) -> RunConfig:
    """Validated RunConfig from parsed arguments; unset options keep their defaults."""
    fields = {k: v for k, v in vars(args).items() if k not in ("verbose", "quiet") and v is not None}
    if isinstance(fields.get("lambda_grid"), str):
        fields["lambda_grid"] = LambdaGrid.parse(fields["lambda_grid"])
    return RunConfig(**fields)


def configure_logging(args: argparse.Namespace) -> None:
    level = logging.DEBUG if args.verbose else (logging.WARNING if args.quiet else logging.INFO)
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args)
    try:
        cfg = run_config(args)
        return HANDLERS[cfg.command](cfg)
    except (ValidationError, ValueError, AnnulusOptError) as exc:
        logger.error(f"Invalid parameters: {exc}")
        return EXIT_PARAMETER
    except OSError as exc:
        logger.error(f"I/O failure: {exc}")
        return EXIT_IO

#!/usr/bin/env python3
"""
chsh-trap command-line front end.

Usage:
    chsh-trap sweep --family phi --alpha 0.70710678 --r 1.0 --points 201
    chsh-trap threshold --family psi --r 1.0
    chsh-trap evolve --model trapping --w 0.95 --t1 50
    chsh-trap oracle-check --n 100 --seed 7 --state-seed 7
"""

import argparse
import logging
import sys
from pathlib import Path

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from chshtrap.core.config import get_settings
from chshtrap.core.exceptions import ConfigurationError
from chshtrap.pipeline import EXIT_USAGE, Command, build_run_config, run


def setup_logging(verbose: bool = False) -> None:
    """Configure logging."""
    level = logging.DEBUG if verbose else get_settings().log_level
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )


def _common_arguments() -> argparse.ArgumentParser:
    """Flags shared by every sub-command. Defaults are None so the config file can fill them."""
    parser = argparse.ArgumentParser(add_help=False)

    state = parser.add_argument_group("state")
    state.add_argument("--family", choices=["phi", "psi"], default=None, help="EWL family")
    state.add_argument("--r", type=float, default=None, help="Purity r in [0, 1]")
    state.add_argument("--alpha", type=float, default=None, help="Bell-like amplitude alpha")
    state.add_argument("--delta", type=float, default=None, help="Bell-like phase (radians)")

    reservoir = parser.add_argument_group("reservoir")
    reservoir.add_argument(
        "--model",
        choices=["markovian", "lorentzian", "trapping"],
        default=None,
        help="Reservoir model",
    )
    reservoir.add_argument("--gamma0", type=float, default=None, help="Decay rate")
    reservoir.add_argument(
        "--lambda", dest="lambda_", type=float, default=None, help="Lorentzian spectral width"
    )
    reservoir.add_argument("--w", type=float, default=None, help="Trapped amplitude in [0, 1]")
    reservoir.add_argument("--t0", type=float, default=None, help="First sample time")
    reservoir.add_argument("--t1", type=float, default=None, help="Last sample time")
    reservoir.add_argument("--samples", type=int, default=None, help="Number of sample times")

    evaluation = parser.add_argument_group("evaluation")
    evaluation.add_argument("--points", type=int, default=None, help="Grid points on [0, 1]")
    evaluation.add_argument(
        "--evaluator", choices=["restricted", "horodecki"], default=None, help="Evaluator"
    )
    evaluation.add_argument(
        "--both-evaluators",
        action="store_true",
        default=None,
        help="Emit restricted and Horodecki results side by side",
    )
    evaluation.add_argument(
        "--purities", type=str, default=None, help="Comma-separated purities (sweep only)"
    )
    evaluation.add_argument("--workers", type=int, default=None, help="Worker threads")

    oracle = parser.add_argument_group("oracle")
    oracle.add_argument(
        "--seed", type=int, default=None, help="Seed of the optimizer's random restarts"
    )
    oracle.add_argument(
        "--state-seed", type=int, default=None, help="Seed of the random X states (oracle-check)"
    )
    oracle.add_argument("--n", type=int, default=None, help="Number of random X states")
    oracle.add_argument("--restarts", type=int, default=None, help="Random restarts per state")
    oracle.add_argument(
        "--grid-density", type=int, default=None, help="Coarse-grid points per angle"
    )

    output = parser.add_argument_group("output")
    output.add_argument("--format", choices=["csv", "json"], default=None, help="Output format")
    output.add_argument("--out", type=Path, default=None, help="Output path (default: stdout)")
    output.add_argument("--config", type=Path, default=None, help="Flat key=value config file")
    output.add_argument("--verbose", "-v", action="store_true", help="Enable verbose logging")
    return parser


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one sub-command per Command."""
    common = _common_arguments()
    parser = argparse.ArgumentParser(
        prog="chsh-trap",
        description="CHSH-Bell nonlocality of two qubits under amplitude damping",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Commands:
    ewl              Initial EWL state (and its evaluation in JSON)
    sweep            Bell maxima over the population parameter x
    threshold        x above which the Bell inequality is violated
    critical-purity  Smallest purity r that ever violates
    evolve           Time series under a reservoir model
    oracle-check     Brute force vs Horodecki on random X states

Violation means B > 2; quantum states reach at most 2 sqrt(2).
        """,
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in Command:
        subparsers.add_parser(command.value, parents=[common])
    return parser


def main(argv: list[str] | None = None) -> int:
    """Main entry point."""
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)

    flags = {
        key: value
        for key, value in vars(args).items()
        if key not in ("command", "config", "verbose")
    }

    try:
        config = build_run_config(args.command, flags=flags, config_file=args.config)
    except ConfigurationError as e:
        logging.error(f"Invalid configuration ({e.config_key}): {e}")
        return EXIT_USAGE

    return run(config)


if __name__ == "__main__":
    sys.exit(main())

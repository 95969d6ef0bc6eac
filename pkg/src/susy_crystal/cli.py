"""CLI for susy-crystal.

Usage:
    susy-crystal synth --epsilon 0.01 --k0 1 --N 1       # Potential over one cell
    susy-crystal spectrum --profile susy --N 100         # Analytic spectrum CSV
    susy-crystal spectrum --method numeric --format json # Numeric spectrum JSON
    susy-crystal compare --profile well                  # Analytic vs numeric check
    susy-crystal figure 3 --out figures/                 # Figure datasets
"""

import argparse
import logging
import sys

from susy_crystal import __version__
from susy_crystal.commands import COMMANDS, CommandContext, dispatch_command
from susy_crystal.commands.dispatcher import EXIT_CONFIG
from susy_crystal.config import ConfigError, RunConfig
from susy_crystal.export import OutputFormat
from susy_crystal.profile import PotentialKind
from susy_crystal.spectra import Method

logger = logging.getLogger(__name__)

CONFIG_KEYS = (
    "epsilon", "k0", "N", "profile", "method", "pmin", "pmax", "points", "slices", "tol",
    "max_doublings", "extrapolate", "threads", "out", "format", "samples",
)


def _common_options() -> argparse.ArgumentParser:
    """Options shared by every subcommand; all default to None so files can fill them."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--epsilon", type=float, help="Well depth (default: 0.01)")
    common.add_argument("--k0", type=float, help="Bragg wavenumber (default: 1)")
    common.add_argument("--N", dest="N", type=int, help="Number of cells (default: 100)")
    common.add_argument(
        "--profile",
        choices=[k.value for k in PotentialKind if k is not PotentialKind.CUSTOM_SAMPLED],
        help="Potential profile (default: susy)",
    )
    common.add_argument(
        "--method", choices=[m.value for m in Method], help="Solver (default: analytic)"
    )
    common.add_argument("--pmin", type=float, help="Lower band edge (default: 0.6*k0)")
    common.add_argument("--pmax", type=float, help="Upper band edge (default: 1.4*k0)")
    common.add_argument("--points", type=int, help="Grid points over the band (default: 2001)")
    common.add_argument("--slices", type=int, help="Starting slices per period (default: 64)")
    common.add_argument("--tol", type=float, help="Convergence/compare tolerance (default: 1e-6)")
    common.add_argument(
        "--max-doublings", dest="max_doublings", type=int,
        help="Slicing doublings before giving up (default: 8)",
    )
    common.add_argument(
        "--no-extrapolate", dest="extrapolate", action="store_const", const=False,
        help="Disable Richardson extrapolation between slicing levels",
    )
    common.add_argument(
        "--threads", type=int, help="Worker threads (default: $SUSY_CRYSTAL_THREADS or CPUs)"
    )
    common.add_argument("--out", "-o", help="Output file or directory ('-' for stdout)")
    common.add_argument(
        "--format", choices=[f.value for f in OutputFormat], help="Output format (default: csv)"
    )
    common.add_argument("--samples", type=int, help="Intervals per cell for synth (default: 512)")
    common.add_argument("--config", "-c", help="Config file (YAML, JSON or key=value)")
    common.add_argument("--verbose", "-v", action="store_true", help="Enable verbose logging")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="susy-crystal",
        description="SUSY-synthesized PT-symmetric crystals: spectra and cross-checks",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  susy-crystal synth --epsilon 0.01 --N 1          Sample one cell of the crystal
  susy-crystal spectrum --N 1000 -o spec.csv       Analytic spectrum of a thick crystal
  susy-crystal spectrum --profile sin --method numeric
                                                   Numeric spectrum of the plain sinusoid
  susy-crystal compare --epsilon 0.1 --N 10        Analytic vs numeric agreement
  susy-crystal figure 4 -o figures/                Figure 4 datasets

Exit codes: 0 ok, 1 compare failed, 2 bad configuration, 3 I/O error,
4 numeric non-convergence.
""",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    common = _common_options()
    for cmd in sorted(COMMANDS.values(), key=lambda c: c.order):
        sub = subparsers.add_parser(
            cmd.name, parents=[common], help=cmd.description, description=cmd.description
        )
        if cmd.add_arguments is not None:
            cmd.add_arguments(sub)
    return parser


def load_run_config(args: argparse.Namespace) -> RunConfig:
    """Defaults, then the config file (explicit or discovered), then flags."""
    if args.config:
        try:
            base = RunConfig.from_file(args.config)
        except FileNotFoundError as e:
            raise ConfigError(str(e)) from None
    else:
        base = RunConfig.find_and_load() or RunConfig()
    return base.merged({key: getattr(args, key, None) for key in CONFIG_KEYS})


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    # Setup logging
    if getattr(args, "verbose", False):
        logging.basicConfig(level=logging.DEBUG)
    else:
        logging.basicConfig(level=logging.WARNING)

    if not args.command:
        parser.print_help()
        return EXIT_CONFIG

    try:
        config = load_run_config(args)
    except ValueError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_CONFIG

    return dispatch_command(args.command, CommandContext(config=config, args=args))


if __name__ == "__main__":
    sys.exit(main())

"""Command dispatcher and exit-code mapping."""

import logging
import sys

from susy_crystal.commands.context import CommandContext
from susy_crystal.commands.registry import COMMANDS
from susy_crystal.numeric import ConvergenceError
from susy_crystal.spectra import SweepError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2
EXIT_IO = 3
EXIT_NO_CONVERGENCE = 4


def exit_code_for(error: BaseException) -> int:
    """Exit status for an exception raised by a command."""
    if isinstance(error, SweepError) and error.__cause__ is not None:
        return exit_code_for(error.__cause__)
    if isinstance(error, ConvergenceError):
        return EXIT_NO_CONVERGENCE
    if isinstance(error, OSError):
        return EXIT_IO
    if isinstance(error, ValueError):
        return EXIT_CONFIG
    raise error


def dispatch_command(name: str, ctx: CommandContext) -> int:
    """Run a registered command and map its failures onto exit codes."""
    if name not in COMMANDS:
        print(f"Error: unknown command {name!r}", file=sys.stderr)
        return EXIT_CONFIG

    try:
        return COMMANDS[name].handler(ctx)
    except Exception as e:
        code = exit_code_for(e)
        logger.debug("Command %s failed with exit code %d", name, code, exc_info=True)
        print(f"Error: {e}", file=sys.stderr)
        return code

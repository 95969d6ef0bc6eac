"""Subcommands for the susy-crystal CLI."""

from susy_crystal.commands.context import CommandContext
from susy_crystal.commands.dispatcher import dispatch_command, exit_code_for
from susy_crystal.commands.registry import COMMANDS, Command, register

__all__ = [
    "Command",
    "COMMANDS",
    "register",
    "CommandContext",
    "dispatch_command",
    "exit_code_for",
]

# Import command modules to register them
from susy_crystal.commands import compare, figure, spectrum, synth  # noqa: E402, F401

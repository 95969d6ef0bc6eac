"""Command context passed to command handlers."""

import argparse
import sys
from dataclasses import dataclass, field
from typing import TextIO

from susy_crystal.config import RunConfig


@dataclass
class CommandContext:
    """Context passed to command handlers."""
    config: RunConfig
    args: argparse.Namespace
    stdout: TextIO = field(default_factory=lambda: sys.stdout)
    stderr: TextIO = field(default_factory=lambda: sys.stderr)

    def echo(self, text: str = "", err: bool = False) -> None:
        print(text, file=self.stderr if err else self.stdout)

    def destination(self, default: str) -> str | TextIO:
        """--out, or ``default``; ``-`` means standard output."""
        out = self.config.out or default
        return self.stdout if out == "-" else out

"""Command registry for the susy-crystal subcommands."""

from collections.abc import Callable
from dataclasses import dataclass


@dataclass
class Command:
    """A registered subcommand."""
    name: str
    description: str
    handler: Callable
    add_arguments: Callable | None = None
    order: int = 100


# Global command registry
COMMANDS: dict[str, Command] = {}


def register(
    name: str,
    desc: str,
    order: int = 100,
    arguments: Callable | None = None,
):
    """Decorator to register a command.

    Usage:
        @register("synth", "Sample the crystal potential", order=1)
        def cmd_synth(ctx: CommandContext) -> int:
            ...
    """
    def decorator(func: Callable) -> Callable:
        COMMANDS[name] = Command(
            name=name,
            description=desc,
            handler=func,
            add_arguments=arguments,
            order=order,
        )
        return func
    return decorator

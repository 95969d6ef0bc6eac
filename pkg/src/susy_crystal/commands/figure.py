"""``figure``: write the datasets of one standard figure."""

from pathlib import Path

from susy_crystal.commands.context import CommandContext
from susy_crystal.commands.dispatcher import EXIT_OK
from susy_crystal.commands.registry import register
from susy_crystal.export import write_table
from susy_crystal.figures import figure_data


def _arguments(parser) -> None:
    parser.add_argument("figure_id", type=int, help="Figure number (1-4)")


@register("figure", "Reproduce the data behind figure 1, 2, 3 or 4", order=4,
          arguments=_arguments)
def cmd_figure(ctx: CommandContext) -> int:
    """Write one figN_<label>.csv per curve into --out (a directory)."""
    config = ctx.config
    config.validate()
    overrides = config.configured("epsilon", "k0", "N", "pmin", "pmax", "points", "samples")
    overrides["slicing"] = config.slicing()
    overrides["threads"] = config.resolved_threads()
    figure_id = ctx.args.figure_id
    data = figure_data(figure_id, overrides)

    out_dir = Path(config.out or ".")
    out_dir.mkdir(parents=True, exist_ok=True)
    for table in data.tables:
        path = out_dir / f"fig{figure_id}_{table.label}.csv"
        write_table(table, path)
        ctx.echo(str(path))
    return EXIT_OK

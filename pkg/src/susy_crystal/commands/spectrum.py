"""``spectrum``: sweep one profile over the momentum band."""

from susy_crystal.commands.context import CommandContext
from susy_crystal.commands.dispatcher import EXIT_OK
from susy_crystal.commands.registry import register
from susy_crystal.export import write_spectrum
from susy_crystal.profile import PotentialProfile
from susy_crystal.spectra import Method, sweep


@register("spectrum", "Compute a transmission/reflection spectrum", order=2)
def cmd_spectrum(ctx: CommandContext) -> int:
    config = ctx.config
    params = config.validate()
    profile = PotentialProfile.from_name(config.profile, params)
    spectrum = sweep(
        profile,
        config.grid(),
        Method(config.method),
        config.slicing(),
        threads=config.resolved_threads(),
    )
    fmt = config.output_format()
    write_spectrum(spectrum, ctx.destination(f"spectrum.{fmt.value}"), fmt)
    return EXIT_OK

"""``synth``: sample one unit cell of the potential and print derived parameters."""

import logging

from susy_crystal.commands.context import CommandContext
from susy_crystal.commands.dispatcher import EXIT_OK
from susy_crystal.commands.registry import register
from susy_crystal.export import format_float, write_potential_samples
from susy_crystal.profile import PotentialProfile

logger = logging.getLogger(__name__)


@register("synth", "Sample the potential over one unit cell", order=1)
def cmd_synth(ctx: CommandContext) -> int:
    """Write x,V_re,V_im over [0, Lambda] and print rho, mu, k1 and L."""
    config = ctx.config
    params = config.validate()
    profile = PotentialProfile.from_name(config.profile, params)

    x, v = profile.sample(config.samples)
    dest = ctx.destination("potential.csv")
    write_potential_samples(x, v, dest)

    # Samples on stdout push the parameters to stderr.
    to_stderr = dest is ctx.stdout
    for name in ("rho", "mu", "k1", "L"):
        ctx.echo(f"{name} = {format_float(getattr(params, name))}", err=to_stderr)
    logger.info("Sampled %s profile at %d points", profile.kind.value, len(x))
    return EXIT_OK

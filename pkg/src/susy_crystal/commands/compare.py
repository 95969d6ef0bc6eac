"""``compare``: analytic versus numeric spectra of the same profile."""

import logging

import numpy as np

from susy_crystal.commands.context import CommandContext
from susy_crystal.commands.dispatcher import EXIT_FAILED, EXIT_OK
from susy_crystal.commands.registry import register
from susy_crystal.config import ConfigError
from susy_crystal.export import format_float, write_columns
from susy_crystal.profile import ANALYTIC_KINDS, PotentialProfile
from susy_crystal.spectra import Method, SpectrumGrid, sweep

logger = logging.getLogger(__name__)

QUANTITIES = ("T", "R_left", "R_right")


def discrepancies(numeric: SpectrumGrid, analytic: SpectrumGrid) -> dict[str, np.ndarray]:
    """Per-point |numeric - analytic| / max(1, |analytic|) for T, R_left and R_right."""
    result = {}
    for name in QUANTITIES:
        a = analytic.column(name)
        b = numeric.column(name)
        result[name] = np.abs(b - a) / np.maximum(1.0, np.abs(a))
    return result


@register("compare", "Cross-check analytic and numeric spectra", order=3)
def cmd_compare(ctx: CommandContext) -> int:
    """Print the worst discrepancy per quantity; exit 1 if any exceeds --tol."""
    config = ctx.config
    params = config.validate()
    profile = PotentialProfile.from_name(config.profile, params)
    if profile.kind not in ANALYTIC_KINDS:
        raise ConfigError(f"profile {config.profile!r} has no analytic solution to compare")

    grid = config.grid()
    threads = config.resolved_threads()
    analytic = sweep(profile, grid, Method.ANALYTIC, threads=threads)
    numeric = sweep(profile, grid, Method.NUMERIC, config.slicing(), threads=threads)
    gaps = discrepancies(numeric, analytic)

    p = analytic.p_values
    ctx.echo(
        f"compare {profile.kind.value} epsilon={config.epsilon:g} k0={config.k0:g} "
        f"N={config.N} points={len(p)} tol={config.tol:g}"
    )
    passed = True
    for name in QUANTITIES:
        worst = int(np.argmax(gaps[name]))
        value = float(gaps[name][worst])
        passed = passed and value <= config.tol
        ctx.echo(f"  {name:<8} max discrepancy {format_float(value)} at p={format_float(p[worst])}")
    ctx.echo("PASS" if passed else "FAIL")

    if config.out:
        data = np.column_stack([p] + [gaps[name] for name in QUANTITIES])
        write_columns(("p", "dT", "dRl", "dRr"), data, ctx.destination(config.out))
    if not passed:
        logger.warning("Analytic and numeric spectra disagree beyond tol=%g", config.tol)
    return EXIT_OK if passed else EXIT_FAILED

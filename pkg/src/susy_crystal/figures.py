"""Plot-ready datasets for the four standard figures.

1. Crystal potential over one cell for eps in {0.1, 0.01}.
2. Square-well reflectance R1(p) for the same depths, N = 100.
3. Crystal R_left, R_right and T for eps = 0.01, N in {100, 1000, 5000}.
4. Numeric transmittance of the plain and shifted complex sinusoids,
   eps = 0.01, N = 5000.
"""

import logging
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from susy_crystal.numeric import SlicingSpec
from susy_crystal.params import derive_params
from susy_crystal.profile import PotentialProfile
from susy_crystal.spectra import Method, MomentumGrid, sweep

logger = logging.getLogger(__name__)

FIGURE_IDS = (1, 2, 3, 4)
DEFAULT_EPSILONS = (0.1, 0.01)
DEFAULT_THICKNESSES = (100, 1000, 5000)


class FigureError(ValueError):
    """Unknown figure number."""


@dataclass(frozen=True)
class Table:
    """One curve or panel: named columns over shared rows."""

    label: str
    columns: tuple[str, ...]
    data: np.ndarray = field(repr=False, compare=False)


@dataclass(frozen=True)
class FigureData:
    figure_id: int
    tables: tuple[Table, ...]
    provenance: dict[str, Any] = field(default_factory=dict)

    def table(self, label: str) -> Table:
        for table in self.tables:
            if table.label == label:
                return table
        raise KeyError(label)


def _eps_label(eps: float) -> str:
    return f"eps{eps:g}"


def _grid(k0: float, opts: dict[str, Any], centers: tuple[float, ...] = ()) -> MomentumGrid:
    return MomentumGrid.band(
        k0,
        p_min=opts.get("pmin"),
        p_max=opts.get("pmax"),
        points=int(opts.get("points", 2001)),
        refine_centers=centers,
    )


def _figure_potential(opts: dict[str, Any]) -> list[Table]:
    k0 = float(opts.get("k0", 1.0))
    samples = int(opts.get("samples", 512))
    tables = []
    for eps in opts.get("epsilons", DEFAULT_EPSILONS):
        profile = PotentialProfile.susy_crystal(derive_params(eps, k0, 1))
        x, v = profile.sample(samples)
        data = np.column_stack([x, v.real, v.imag])
        tables.append(Table(_eps_label(eps), ("x", "V_re", "V_im"), data))
    return tables


def _figure_well(opts: dict[str, Any]) -> list[Table]:
    k0 = float(opts.get("k0", 1.0))
    n = int(opts.get("N", 100))
    tables = []
    for eps in opts.get("epsilons", DEFAULT_EPSILONS):
        profile = PotentialProfile.square_well(derive_params(eps, k0, n))
        spectrum = sweep(profile, _grid(k0, opts), threads=opts.get("threads"))
        data = np.column_stack([spectrum.p_values, spectrum.R_left])
        tables.append(Table(f"R1_{_eps_label(eps)}", ("p", "R1"), data))
    return tables


def _figure_crystal(opts: dict[str, Any]) -> list[Table]:
    k0 = float(opts.get("k0", 1.0))
    eps = float(opts.get("epsilon", 0.01))
    tables = []
    for n in opts.get("thicknesses", DEFAULT_THICKNESSES):
        params = derive_params(eps, k0, n)
        profile = PotentialProfile.susy_crystal(params)
        spectrum = sweep(profile, _grid(k0, opts, (params.k1,)), threads=opts.get("threads"))
        for name, values in (
            ("Rl", spectrum.R_left),
            ("Rr", spectrum.R_right),
            ("T", spectrum.T),
        ):
            data = np.column_stack([spectrum.p_values, values])
            tables.append(Table(f"{name}_N{n}", ("p", name), data))
    return tables


def _figure_sinusoid(opts: dict[str, Any]) -> list[Table]:
    k0 = float(opts.get("k0", 1.0))
    eps = float(opts.get("epsilon", 0.01))
    n = int(opts.get("N", 5000))
    params = derive_params(eps, k0, n)
    grid = _grid(k0, opts, (params.k0, params.k1))
    spec = opts.get("slicing") or SlicingSpec()
    tables = []
    for bias in (False, True):
        profile = PotentialProfile.sinusoidal(params, bias=bias)
        spectrum = sweep(profile, grid, Method.NUMERIC, spec, threads=opts.get("threads"))
        data = np.column_stack([spectrum.p_values, spectrum.T])
        tables.append(Table(f"T_{profile.kind.value}", ("p", "T"), data))
    return tables


_BUILDERS = {
    1: _figure_potential,
    2: _figure_well,
    3: _figure_crystal,
    4: _figure_sinusoid,
}


def figure_data(figure_id: int, overrides: dict[str, Any] | None = None) -> FigureData:
    """Build the dataset of one figure.

    ``overrides`` may set ``epsilon`` (a single depth instead of the default
    pair), ``k0``, ``N`` (a single thickness), ``pmin``, ``pmax``, ``points``,
    ``samples``, ``slicing`` (a SlicingSpec) and ``threads``.

    Raises:
        FigureError: ``figure_id`` is not one of 1..4.
    """
    if figure_id not in _BUILDERS:
        raise FigureError(f"figure must be one of {FIGURE_IDS}, got {figure_id!r}")
    opts = dict(overrides or {})
    if "epsilon" in opts:
        opts["epsilons"] = (float(opts["epsilon"]),)
    if figure_id == 3 and "N" in opts:
        opts["thicknesses"] = (int(opts["N"]),)

    logger.info("Building figure %d", figure_id)
    tables = tuple(_BUILDERS[figure_id](opts))
    provenance = {
        key: value
        for key, value in opts.items()
        if key not in ("slicing", "threads", "epsilons", "thicknesses")
    }
    if isinstance(opts.get("slicing"), SlicingSpec):
        provenance["slicing"] = opts["slicing"].to_dict()
    return FigureData(figure_id=figure_id, tables=tables, provenance=provenance)

"""Momentum sweeps and invisibility metrics."""

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum
from typing import Any

import numpy as np

from susy_crystal import __version__
from susy_crystal.analytic import (
    ScatteringCoefficients,
    crystal_coefficients,
    square_well_coefficients,
)
from susy_crystal.numeric import SlicingSpec, scatter_numeric
from susy_crystal.profile import ANALYTIC_KINDS, PotentialKind, PotentialProfile

logger = logging.getLogger(__name__)


class Method(Enum):
    """How scattering coefficients are obtained."""

    ANALYTIC = "analytic"
    NUMERIC = "numeric"


class EmptyBandError(ValueError):
    """No grid point falls inside the requested band."""


class SweepError(RuntimeError):
    """A single momentum of a sweep failed."""

    def __init__(self, p: float, cause: Exception):
        self.p = p
        super().__init__(f"at p={p!r}: {cause}")


@dataclass(frozen=True)
class MomentumGrid:
    """Uniform band plus optional dense windows around chosen momenta.

    Each window spans ``center +/- refine_halfwidth`` with ``refine_points``
    points and contains ``center`` exactly. Windows are clipped to the band.
    """

    p_min: float = 0.6
    p_max: float = 1.4
    points: int = 2001
    refine_centers: tuple[float, ...] = ()
    refine_halfwidth: float = 5e-3
    refine_points: int = 201

    def __post_init__(self):
        if not 0.0 < self.p_min < self.p_max:
            raise ValueError("grid band must satisfy 0 < p_min < p_max")
        if self.points < 2:
            raise ValueError("grid needs at least 2 points")
        if self.refine_centers and (self.refine_points < 1 or self.refine_halfwidth <= 0.0):
            raise ValueError("refinement needs refine_points >= 1 and refine_halfwidth > 0")

    @classmethod
    def band(cls, k0: float, p_min: float | None = None, p_max: float | None = None,
             points: int = 2001, refine_centers: tuple[float, ...] = ()) -> "MomentumGrid":
        """Grid over (0.6 k0, 1.4 k0) unless explicit limits are given."""
        return cls(
            p_min=0.6 * k0 if p_min is None else p_min,
            p_max=1.4 * k0 if p_max is None else p_max,
            points=points,
            refine_centers=tuple(refine_centers),
        )

    def values(self) -> np.ndarray:
        grid = np.linspace(self.p_min, self.p_max, self.points)
        for center in self.refine_centers:
            window = center + self.refine_halfwidth * np.linspace(-1.0, 1.0, self.refine_points)
            window[self.refine_points // 2] = center
            inside = (window >= self.p_min) & (window <= self.p_max)
            grid = np.union1d(grid, window[inside])
        return grid

    def to_dict(self) -> dict[str, Any]:
        return {
            "p_min": self.p_min,
            "p_max": self.p_max,
            "points": self.points,
            "refine_centers": list(self.refine_centers),
            "refine_halfwidth": self.refine_halfwidth,
            "refine_points": self.refine_points,
        }


@dataclass(frozen=True)
class SpectrumGrid:
    """Scattering coefficients on a strictly increasing momentum grid."""

    p_values: np.ndarray = field(repr=False, compare=False)
    rows: tuple[ScatteringCoefficients, ...] = field(repr=False)
    method: Method
    profile: dict[str, Any]
    provenance: dict[str, Any]
    created_at: str = field(
        default_factory=lambda: datetime.now(timezone.utc).isoformat(), compare=False
    )

    def __post_init__(self):
        p = np.asarray(self.p_values, dtype=float)
        if len(p) != len(self.rows):
            raise ValueError("rows must match p_values one to one")
        if p.size and (p[0] <= 0.0 or np.any(np.diff(p) <= 0.0)):
            raise ValueError("p_values must be positive and strictly increasing")
        p.setflags(write=False)
        object.__setattr__(self, "p_values", p)

    def column(self, name: str) -> np.ndarray:
        """One derived column: ``T``, ``R_left`` or ``R_right``."""
        return np.array([getattr(row, name) for row in self.rows], dtype=float)

    @property
    def T(self) -> np.ndarray:
        return self.column("T")

    @property
    def R_left(self) -> np.ndarray:
        return self.column("R_left")

    @property
    def R_right(self) -> np.ndarray:
        return self.column("R_right")


def resolve_threads(threads: int | None = None) -> int:
    """Worker count: explicit value, else SUSY_CRYSTAL_THREADS, else CPU count."""
    if threads is None:
        env = os.environ.get("SUSY_CRYSTAL_THREADS")
        if env:
            try:
                threads = int(env)
            except ValueError:
                message = f"SUSY_CRYSTAL_THREADS must be an integer, got {env!r}"
                raise ValueError(message) from None
    if threads is None:
        threads = os.cpu_count() or 1
    if threads < 1:
        raise ValueError("threads must be >= 1")
    return threads


def sweep(
    profile: PotentialProfile,
    grid: MomentumGrid,
    method: Method = Method.ANALYTIC,
    spec: SlicingSpec | None = None,
    threads: int | None = None,
) -> SpectrumGrid:
    """Evaluate scattering at every grid momentum, rows in grid order.

    Raises:
        ValueError: analytic method requested for a kind without closed forms.
        SweepError: a point failed; chained to the original exception.
    """
    if method is Method.ANALYTIC and profile.kind not in ANALYTIC_KINDS:
        raise ValueError(f"no analytic solution for the {profile.kind.value} profile")
    spec = spec or SlicingSpec()
    p_values = grid.values()
    workers = resolve_threads(threads)

    if method is Method.NUMERIC:
        def solve(p: float) -> ScatteringCoefficients:
            return scatter_numeric(profile, p, spec)
    elif profile.kind is PotentialKind.SQUARE_WELL:
        def solve(p: float) -> ScatteringCoefficients:
            return square_well_coefficients(p, profile.params)
    else:
        def solve(p: float) -> ScatteringCoefficients:
            return crystal_coefficients(p, profile.params)

    def evaluate(p: float) -> ScatteringCoefficients:
        try:
            return solve(float(p))
        except Exception as e:
            raise SweepError(float(p), e) from e

    logger.info(
        "Sweeping %s profile (%s) over %d points with %d workers",
        profile.kind.value, method.value, len(p_values), workers,
    )
    with ThreadPoolExecutor(max_workers=workers) as pool:
        rows = tuple(pool.map(evaluate, p_values))
    logger.info("Sweep finished: %d rows", len(rows))

    provenance: dict[str, Any] = {
        "version": __version__,
        "method": method.value,
        "profile": profile.describe(),
        "grid": grid.to_dict(),
    }
    if method is Method.NUMERIC:
        provenance["slicing"] = spec.to_dict()
    return SpectrumGrid(
        p_values=p_values,
        rows=rows,
        method=method,
        profile=profile.describe(),
        provenance=provenance,
    )


@dataclass(frozen=True)
class InvisibilityReport:
    """Band extrema of the quantities that certify unidirectional invisibility."""

    band: tuple[float, float]
    sup_abs_T_minus_1: float
    sup_R_right: float
    max_R_left: float
    argmax_R_left: float
    points: int


def invisibility_metrics(
    spectrum: SpectrumGrid, band: tuple[float, float] | None = None
) -> InvisibilityReport:
    """Extrema over the grid points inside ``band`` (default: the whole grid).

    Raises:
        ValueError: band reaches outside the grid's range.
        EmptyBandError: no grid point lies inside the band.
    """
    p = spectrum.p_values
    if p.size == 0:
        raise EmptyBandError("spectrum has no points")
    lo, hi = band if band is not None else (float(p[0]), float(p[-1]))
    if lo > hi:
        raise ValueError(f"band lower edge {lo} exceeds upper edge {hi}")
    slack = 1e-12 * max(1.0, abs(p[-1]))
    if lo < p[0] - slack or hi > p[-1] + slack:
        raise ValueError(f"band ({lo}, {hi}) lies outside the grid ({p[0]}, {p[-1]})")

    mask = (p >= lo) & (p <= hi)
    if not np.any(mask):
        raise EmptyBandError(f"no grid points in band ({lo}, {hi})")

    t = spectrum.T[mask]
    r_left = spectrum.R_left[mask]
    r_right = spectrum.R_right[mask]
    peak = int(np.argmax(r_left))
    return InvisibilityReport(
        band=(float(lo), float(hi)),
        sup_abs_T_minus_1=float(np.max(np.abs(t - 1.0))),
        sup_R_right=float(np.max(r_right)),
        max_R_left=float(r_left[peak]),
        argmax_R_left=float(p[mask][peak]),
        points=int(mask.sum()),
    )

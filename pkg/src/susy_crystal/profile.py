"""Tagged scattering potentials with a point-evaluation contract."""

import logging
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any

import numpy as np

from susy_crystal.params import CrystalParams, DomainError
from susy_crystal.synthesis import (
    partner_potential,
    shallow_limit_potential,
    square_well_potential,
)

logger = logging.getLogger(__name__)


class PotentialKind(Enum):
    """Kinds of potential understood by the scattering engines.

    Values double as the command-line profile names.
    """

    SQUARE_WELL = "well"
    SUSY_CRYSTAL = "susy"
    SINUSOIDAL = "sin"
    SHIFTED_SINUSOIDAL = "sin-shifted"
    CUSTOM_SAMPLED = "custom"


PERIODIC_KINDS = frozenset(
    {
        PotentialKind.SQUARE_WELL,
        PotentialKind.SUSY_CRYSTAL,
        PotentialKind.SINUSOIDAL,
        PotentialKind.SHIFTED_SINUSOIDAL,
    }
)
ANALYTIC_KINDS = frozenset({PotentialKind.SQUARE_WELL, PotentialKind.SUSY_CRYSTAL})


@dataclass(frozen=True)
class PotentialProfile:
    """A potential supported on (0, length), zero outside.

    Parametric kinds carry ``params``. ``CUSTOM_SAMPLED`` carries ``samples``,
    the values at the midpoints of ``len(samples)`` equal slices of the
    support, and is piecewise constant between them.
    """

    kind: PotentialKind
    params: CrystalParams | None = None
    samples: np.ndarray | None = field(default=None, compare=False, repr=False)
    support_length: float | None = None

    def __post_init__(self):
        if self.kind is PotentialKind.CUSTOM_SAMPLED:
            if self.samples is None or self.support_length is None:
                raise ValueError("custom profiles need samples and a support length")
            values = np.asarray(self.samples, dtype=complex).ravel()
            if values.size == 0:
                raise ValueError("custom profiles need at least one sample")
            if not self.support_length > 0.0:
                raise DomainError("support length must be > 0")
            values.setflags(write=False)
            object.__setattr__(self, "samples", values)
        elif self.params is None:
            raise ValueError(f"{self.kind.value} profiles need crystal parameters")

    @classmethod
    def square_well(cls, params: CrystalParams) -> "PotentialProfile":
        return cls(PotentialKind.SQUARE_WELL, params)

    @classmethod
    def susy_crystal(cls, params: CrystalParams) -> "PotentialProfile":
        return cls(PotentialKind.SUSY_CRYSTAL, params)

    @classmethod
    def sinusoidal(cls, params: CrystalParams, bias: bool = False) -> "PotentialProfile":
        kind = PotentialKind.SHIFTED_SINUSOIDAL if bias else PotentialKind.SINUSOIDAL
        return cls(kind, params)

    @classmethod
    def custom(cls, values, length: float) -> "PotentialProfile":
        return cls(PotentialKind.CUSTOM_SAMPLED, samples=values, support_length=float(length))

    @classmethod
    def from_name(cls, name: str, params: CrystalParams) -> "PotentialProfile":
        """Build a parametric profile from its command-line name."""
        try:
            kind = PotentialKind(name)
        except ValueError:
            raise ValueError(f"Unknown profile: {name}") from None
        if kind is PotentialKind.CUSTOM_SAMPLED:
            raise ValueError("custom profiles are loaded from a samples file")
        return cls(kind, params)

    @classmethod
    def from_csv(cls, path: str | Path) -> "PotentialProfile":
        """Load an ``x,V_re,V_im`` table as a sampled profile.

        A table whose first row sits at x = 0 holds node samples with both
        ends included (the ``synth`` layout); each slice then takes the mean
        of its two end values. Any other table is read as slice midpoints on
        a uniform grid, with the support shifted to start at zero.
        """
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f"Samples file not found: {path}")
        table = np.loadtxt(path, delimiter=",", comments="#", skiprows=1, ndmin=2)
        if table.shape[1] != 3:
            raise ValueError(f"{path}: expected columns x,V_re,V_im")
        x = table[:, 0]
        if x.size < 2:
            raise ValueError(f"{path}: need at least two samples")
        steps = np.diff(x)
        h = float(steps.mean())
        if h <= 0.0 or not np.allclose(steps, h, rtol=1e-9, atol=0.0):
            raise ValueError(f"{path}: samples must be uniformly spaced and increasing")
        values = table[:, 1] + 1j * table[:, 2]
        if abs(x[0]) <= 1e-9 * h:
            logger.debug("Loaded %d node samples from %s (step %g)", x.size, path, h)
            return cls.custom(0.5 * (values[:-1] + values[1:]), float(x[-1]))
        logger.debug("Loaded %d samples from %s (step %g)", x.size, path, h)
        return cls.custom(values, h * x.size)

    @property
    def length(self) -> float:
        if self.kind is PotentialKind.CUSTOM_SAMPLED:
            return self.support_length
        return self.params.L

    @property
    def is_periodic(self) -> bool:
        return self.kind in PERIODIC_KINDS

    @property
    def period(self) -> float:
        """Cell length; a sampled profile is a single cell."""
        if self.is_periodic:
            return self.params.Lambda
        return self.support_length

    @property
    def cells(self) -> int:
        if self.is_periodic:
            return self.params.N
        return 1

    def evaluate(self, x):
        """Potential value at ``x`` (scalar or array), exactly zero outside the support."""
        if self.kind is PotentialKind.SQUARE_WELL:
            return square_well_potential(x, self.params)
        if self.kind is PotentialKind.SUSY_CRYSTAL:
            return partner_potential(x, self.params)
        if self.kind is PotentialKind.SINUSOIDAL:
            return shallow_limit_potential(x, self.params, bias=False)
        if self.kind is PotentialKind.SHIFTED_SINUSOIDAL:
            return shallow_limit_potential(x, self.params, bias=True)
        return self._evaluate_samples(x)

    def _evaluate_samples(self, x):
        xs = np.asarray(x, dtype=float)
        n = self.samples.size
        inside = (xs >= 0.0) & (xs <= self.support_length)
        index = np.clip(np.floor(xs * (n / self.support_length)), 0, n - 1).astype(int)
        out = np.where(inside, self.samples[index], 0.0 + 0.0j)
        if np.ndim(x) == 0:
            return complex(out)
        return out

    def sample(self, count: int, start: float = 0.0, stop: float | None = None):
        """Evaluate on ``count`` equal intervals of [start, stop], endpoints included."""
        if count < 1:
            raise ValueError("count must be >= 1")
        if stop is None:
            stop = self.period
        x = np.linspace(start, stop, count + 1)
        return x, np.asarray(self.evaluate(x))

    def describe(self) -> dict[str, Any]:
        """Descriptor used in provenance records."""
        info: dict[str, Any] = {"kind": self.kind.value, "length": self.length}
        if self.params is not None:
            info["params"] = self.params.to_dict()
        if self.samples is not None:
            info["samples"] = int(self.samples.size)
        return info

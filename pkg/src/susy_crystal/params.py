"""Crystal parameters and the quantities derived from them.

Units follow the dimensionless convention hbar^2/2m = 1, so energies and
squared wavenumbers share a scale.
"""

import math
from dataclasses import dataclass
from typing import Any


class DomainError(ValueError):
    """Raised when an input lies outside the domain where the model is defined."""


@dataclass(frozen=True)
class CrystalParams:
    """Well depth, Bragg wavenumber and cell count, plus derived quantities.

    ``epsilon == 0`` is the free limit: ``rho`` is infinite, ``mu`` is zero
    and every potential vanishes identically.
    """

    epsilon: float
    k0: float
    N: int
    Lambda: float
    L: float
    E1: float
    k1: float
    rho: float
    mu: float

    @property
    def is_free(self) -> bool:
        return self.epsilon == 0.0

    def to_dict(self) -> dict[str, Any]:
        """Plain-value view used for provenance records."""
        return {
            "epsilon": self.epsilon,
            "k0": self.k0,
            "N": self.N,
            "Lambda": self.Lambda,
            "L": self.L,
            "E1": self.E1,
            "k1": self.k1,
            "rho": self.rho if math.isfinite(self.rho) else "inf",
            "mu": self.mu,
        }


def _stable_rho(epsilon: float, k0: float) -> float:
    """atanh(y) with y = sqrt(1 - epsilon/k0^2), without forming 1 - y directly."""
    ratio = epsilon / (k0 * k0)
    if ratio == 0.0:
        return math.inf
    y = math.sqrt(1.0 - ratio)
    one_minus_y = ratio / (1.0 + y)
    return 0.5 * math.log((1.0 + y) / one_minus_y)


def derive_params(epsilon: float, k0: float = 1.0, N: int = 1) -> CrystalParams:
    """Validate (epsilon, k0, N) and populate every derived field.

    Raises:
        DomainError: if k0 <= 0, epsilon < 0, epsilon >= k0^2 or N < 1.
    """
    epsilon = float(epsilon)
    k0 = float(k0)
    if not math.isfinite(k0) or k0 <= 0.0:
        raise DomainError("k0 must be > 0")
    if not math.isfinite(epsilon) or epsilon < 0.0:
        raise DomainError("epsilon must be >= 0")
    if epsilon >= k0 * k0:
        raise DomainError("epsilon must be < k0^2")
    if isinstance(N, bool) or int(N) != N:
        raise DomainError("N must be an integer")
    N = int(N)
    if N < 1:
        raise DomainError("N must be >= 1")

    period = math.pi / k0
    e1 = k0 * k0 - epsilon
    return CrystalParams(
        epsilon=epsilon,
        k0=k0,
        N=N,
        Lambda=period,
        L=N * period,
        E1=e1,
        k1=math.sqrt(e1),
        rho=_stable_rho(epsilon, k0),
        mu=math.sqrt(epsilon) / k0,
    )


def check_momentum(p: float) -> float:
    """Return ``p`` as a float, rejecting non-positive or non-finite momenta."""
    p = float(p)
    if not math.isfinite(p) or p <= 0.0:
        raise DomainError(f"momentum must be > 0, got {p!r}")
    return p

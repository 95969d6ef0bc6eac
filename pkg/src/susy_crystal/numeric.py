"""Transfer-matrix scattering engine for arbitrary complex potentials.

The support is cut into slices of constant potential, sampled at slice
midpoints. Each slice is propagated exactly and expressed in the plane-wave
basis ``a exp(ip(x - x0)) + b exp(-ip(x - x0))`` referenced to its own left
edge. Periodic profiles compose one cell and raise it to the N-th power by
repeated squaring.
"""

import logging
from dataclasses import dataclass, replace

import numpy as np

from susy_crystal.analytic import ScatteringCoefficients
from susy_crystal.params import check_momentum
from susy_crystal.profile import PotentialProfile

logger = logging.getLogger(__name__)

# Below this |q h| the slice uses the series of sin(qh)/q.
SERIES_THRESHOLD = 1e-4


class ConvergenceError(RuntimeError):
    """Slicing refinement did not settle within the allowed number of doublings."""

    def __init__(self, p: float, previous: ScatteringCoefficients,
                 latest: ScatteringCoefficients, slices_per_period: int):
        self.p = p
        self.previous = previous
        self.latest = latest
        self.slices_per_period = slices_per_period
        super().__init__(
            f"no convergence at p={p!r} after reaching {slices_per_period} slices per period: "
            f"T {previous.T!r} -> {latest.T!r}, "
            f"R_left {previous.R_left!r} -> {latest.R_left!r}, "
            f"R_right {previous.R_right!r} -> {latest.R_right!r}"
        )


class GridTooCoarseError(ValueError):
    """A finite-difference grid is too short or not uniform."""


@dataclass(frozen=True)
class SlicingSpec:
    """How finely to slice a potential and when to stop refining.

    ``max_doublings=0`` evaluates the starting slicing once. With
    ``extrapolate`` successive levels are combined as (4 X(2S) - X(S)) / 3.
    """

    slices_per_period: int = 64
    use_monodromy_power: bool = True
    convergence_tol: float = 1e-6
    max_doublings: int = 8
    extrapolate: bool = True

    def __post_init__(self):
        if self.slices_per_period < 4:
            raise ValueError("slices_per_period must be >= 4")
        if self.convergence_tol <= 0.0:
            raise ValueError("convergence_tol must be > 0")
        if self.max_doublings < 0:
            raise ValueError("max_doublings must be >= 0")

    def to_dict(self) -> dict:
        return {
            "slices_per_period": self.slices_per_period,
            "use_monodromy_power": self.use_monodromy_power,
            "convergence_tol": self.convergence_tol,
            "max_doublings": self.max_doublings,
            "extrapolate": self.extrapolate,
        }


@dataclass(frozen=True)
class TransferMatrix:
    """2x2 matrix acting on (right-moving, left-moving) amplitudes."""

    m11: complex
    m12: complex
    m21: complex
    m22: complex

    @classmethod
    def from_array(cls, m: np.ndarray) -> "TransferMatrix":
        return cls(complex(m[0, 0]), complex(m[0, 1]), complex(m[1, 0]), complex(m[1, 1]))

    @classmethod
    def identity(cls) -> "TransferMatrix":
        return cls(1.0 + 0j, 0j, 0j, 1.0 + 0j)

    def to_array(self) -> np.ndarray:
        return np.array([[self.m11, self.m12], [self.m21, self.m22]], dtype=complex)

    @property
    def det(self) -> complex:
        return self.m11 * self.m22 - self.m12 * self.m21

    def __matmul__(self, other: "TransferMatrix") -> "TransferMatrix":
        """``self @ other`` propagates through ``other`` first."""
        return TransferMatrix.from_array(self.to_array() @ other.to_array())

    def power(self, n: int) -> "TransferMatrix":
        return TransferMatrix.from_array(np.linalg.matrix_power(self.to_array(), n))

    def scattering(self, p: float, length: float) -> tuple[ScatteringCoefficients, complex]:
        """Amplitudes of a scatterer on (0, length) and its right-incidence transmission."""
        phase = np.exp(-1j * p * length)
        t_left = phase * self.det / self.m22
        t_right = phase / self.m22
        r_left = -self.m21 / self.m22
        r_right = self.m12 * phase * phase / self.m22
        coeffs = ScatteringCoefficients(
            p=p, t=complex(t_left), r_left=complex(r_left), r_right=complex(r_right)
        )
        return coeffs, complex(t_right)


def _local_wavenumber(p: float, v: np.ndarray) -> np.ndarray:
    q = np.sqrt(p * p - v + 0j)
    flip = (q.real == 0.0) & (q.imag < 0.0)
    return np.where(flip, -q, q)


def _slice_matrices(v: np.ndarray, p: float, h: float) -> np.ndarray:
    """Stack of (n, 2, 2) exact slice propagators for midpoint values ``v``."""
    v = np.asarray(v, dtype=complex).ravel()
    q = _local_wavenumber(p, v)
    qh = q * h
    small = np.abs(qh) < SERIES_THRESHOLD
    q_safe = np.where(small, 1.0, q)
    s = np.where(small, h - q * q * h**3 / 6.0, np.sin(qh) / q_safe)
    c = np.cos(qh)
    k = s / (2.0 * p)

    mats = np.empty((v.size, 2, 2), dtype=complex)
    mats[:, 0, 0] = c + 1j * k * (p * p + q * q)
    mats[:, 0, 1] = -1j * k * v
    mats[:, 1, 0] = 1j * k * v
    mats[:, 1, 1] = c - 1j * k * (p * p + q * q)
    return mats


def _compose(mats: np.ndarray) -> np.ndarray:
    """Product mats[-1] @ ... @ mats[0] by pairwise tree reduction."""
    while mats.shape[0] > 1:
        if mats.shape[0] % 2:
            mats = np.concatenate([mats, np.eye(2, dtype=complex)[None]], axis=0)
        mats = mats[1::2] @ mats[0::2]
    return mats[0]


def slice_matrix(V_mid: complex, p: float, h: float) -> TransferMatrix:
    """Exact propagator across a slice of width ``h`` and constant potential ``V_mid``."""
    p = check_momentum(p)
    if not h > 0.0:
        raise ValueError("slice width must be > 0")
    return TransferMatrix.from_array(_slice_matrices(np.array([V_mid]), p, h)[0])


def _midpoints(start: float, stop: float, count: int) -> tuple[np.ndarray, float]:
    h = (stop - start) / count
    return start + (np.arange(count) + 0.5) * h, h


def _direct(profile: PotentialProfile, p: float, count: int) -> np.ndarray:
    x, h = _midpoints(0.0, profile.length, count)
    return _compose(_slice_matrices(profile.evaluate(x), p, h))


def _total_matrix(profile: PotentialProfile, p: float, spec: SlicingSpec) -> np.ndarray:
    per_period = spec.slices_per_period
    if not profile.is_periodic:
        # Piecewise constant already: one exact slice per sample.
        return _direct(profile, p, profile.samples.size)
    if not spec.use_monodromy_power:
        return _direct(profile, p, profile.cells * per_period)
    x, h = _midpoints(0.0, profile.period, per_period)
    cell = _compose(_slice_matrices(profile.evaluate(x), p, h))
    return np.linalg.matrix_power(cell, profile.cells)


def monodromy(profile: PotentialProfile, p: float, spec: SlicingSpec) -> TransferMatrix:
    """Transfer matrix of the whole support.

    With ``use_monodromy_power`` the one-cell matrix is raised to the cell
    count; otherwise every slice is composed directly.

    Raises:
        ValueError: if monodromy powering is requested for a profile that is
            not a whole number of periods.
    """
    p = check_momentum(p)
    if spec.use_monodromy_power and not profile.is_periodic:
        raise ValueError(
            f"{profile.kind.value} profile is not an integer number of periods; "
            "disable use_monodromy_power"
        )
    return TransferMatrix.from_array(_total_matrix(profile, p, spec))


@dataclass(frozen=True)
class NumericResult:
    """Converged amplitudes plus diagnostics of the refinement that produced them."""

    coefficients: ScatteringCoefficients
    t_right: complex
    slices_per_period: int
    doublings: int
    det_drift: float


def _amplitudes(matrix: TransferMatrix, p: float, length: float) -> np.ndarray:
    coeffs, t_right = matrix.scattering(p, length)
    return np.array([coeffs.t, t_right, coeffs.r_left, coeffs.r_right], dtype=complex)


def _as_coefficients(p: float, amps: np.ndarray) -> ScatteringCoefficients:
    return ScatteringCoefficients(
        p=p, t=complex(amps[0]), r_left=complex(amps[2]), r_right=complex(amps[3])
    )


def _discrepancy(a: ScatteringCoefficients, b: ScatteringCoefficients) -> float:
    return max(
        abs(x - y) / max(1.0, abs(y))
        for x, y in ((a.T, b.T), (a.R_left, b.R_left), (a.R_right, b.R_right))
    )


def solve_numeric(profile: PotentialProfile, p: float, spec: SlicingSpec) -> NumericResult:
    """Scatter ``profile`` at momentum ``p``, doubling the slicing until it settles.

    Convergence is declared when two successive estimates of T, R_left and
    R_right differ by less than ``convergence_tol`` relative to max(1, value).

    Raises:
        ConvergenceError: after ``max_doublings`` doublings without settling.
    """
    p = check_momentum(p)
    use_power = spec.use_monodromy_power and profile.is_periodic
    before: ScatteringCoefficients | None = None
    previous: ScatteringCoefficients | None = None
    raw_previous: np.ndarray | None = None

    for level in range(spec.max_doublings + 1):
        level_spec = replace(
            spec,
            slices_per_period=spec.slices_per_period * 2**level,
            use_monodromy_power=use_power,
        )
        matrix = monodromy(profile, p, level_spec)
        raw = _amplitudes(matrix, p, profile.length)
        if spec.extrapolate and raw_previous is not None:
            amps = (4.0 * raw - raw_previous) / 3.0
        else:
            amps = raw
        estimate = _as_coefficients(p, amps)

        done = spec.max_doublings == 0
        if previous is not None:
            gap = _discrepancy(estimate, previous)
            logger.debug(
                "p=%.12g slices/period=%d gap=%.3e", p, level_spec.slices_per_period, gap
            )
            done = gap < spec.convergence_tol
        if done:
            return NumericResult(
                coefficients=estimate,
                t_right=complex(amps[1]),
                slices_per_period=level_spec.slices_per_period,
                doublings=level,
                det_drift=abs(matrix.det - 1.0),
            )
        before, previous, raw_previous = previous, estimate, raw

    raise ConvergenceError(
        p, before, previous, spec.slices_per_period * 2**spec.max_doublings
    )


def scatter_numeric(
    profile: PotentialProfile, p: float, spec: SlicingSpec | None = None
) -> ScatteringCoefficients:
    """Converged (t, r_left, r_right) of ``profile`` at momentum ``p``."""
    result = solve_numeric(profile, p, spec or SlicingSpec())
    logger.debug(
        "p=%.12g converged at %d slices/period after %d doublings",
        p, result.slices_per_period, result.doublings,
    )
    return result.coefficients


def schrodinger_residual(samples, profile: PotentialProfile, E: float) -> float:
    """Max |xi'' + (E - V) xi| over interior grid points, xi'' by central differences.

    ``samples`` is a sequence of (x, xi) pairs on a uniform grid.

    Raises:
        GridTooCoarseError: fewer than three points or a non-uniform grid.
    """
    pairs = list(samples)
    if len(pairs) < 3:
        raise GridTooCoarseError(f"need at least 3 grid points, got {len(pairs)}")
    x = np.array([pair[0] for pair in pairs], dtype=float)
    xi = np.array([pair[1] for pair in pairs], dtype=complex)
    steps = np.diff(x)
    h = float(steps.mean())
    if h <= 0.0 or not np.allclose(steps, h, rtol=1e-8, atol=0.0):
        raise GridTooCoarseError("grid must be uniform and increasing")

    second = (xi[2:] - 2.0 * xi[1:-1] + xi[:-2]) / (h * h)
    v = np.asarray(profile.evaluate(x[1:-1]))
    return float(np.max(np.abs(second + (E - v) * xi[1:-1])))

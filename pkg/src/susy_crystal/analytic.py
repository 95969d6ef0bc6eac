"""Closed-form scattering for the square well and its SUSY partner crystal.

The well phase qL is split as N*pi + dq*L with
``dq = (p - k1)(p + k1)/(q + k0)``, so sin(qL) vanishes exactly at p = k1
and large crystals lose no digits in the trigonometric arguments.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from susy_crystal.params import CrystalParams, check_momentum

# Half-width of the window around k1, in units of k0, where the left
# reflection of the crystal is taken from its p -> k1 limit.
DELTA_WINDOW = 1e-6


@dataclass(frozen=True)
class ScatteringCoefficients:
    """Complex amplitudes at one momentum, unit-amplitude incident waves."""

    p: float
    t: complex
    r_left: complex
    r_right: complex

    @property
    def T(self) -> float:
        return abs(self.t) ** 2

    @property
    def R_left(self) -> float:
        return abs(self.r_left) ** 2

    @property
    def R_right(self) -> float:
        return abs(self.r_right) ** 2


@dataclass(frozen=True)
class _WellTerms:
    q: float
    sin_ql: float
    cos_ql: float
    denominator: complex


def _well_terms(p: float, params: CrystalParams) -> _WellTerms:
    q = math.sqrt(p * p + params.epsilon)
    dq = (p - params.k1) * (p + params.k1) / (q + params.k0)
    sign = -1.0 if params.N % 2 else 1.0
    s = sign * math.sin(dq * params.L)
    c = sign * math.cos(dq * params.L)
    d = complex(2.0 * p * q * c, -(p * p + q * q) * s)
    return _WellTerms(q=q, sin_ql=s, cos_ql=c, denominator=d)


def square_well_coefficients(p: float, params: CrystalParams) -> ScatteringCoefficients:
    """Transmission and both reflections of the well of depth epsilon on (0, L)."""
    p = check_momentum(p)
    if params.is_free:
        return ScatteringCoefficients(p=p, t=1.0 + 0j, r_left=0j, r_right=0j)

    w = _well_terms(p, params)
    t = 2.0 * p * w.q * cmath.exp(-1j * p * params.L) / w.denominator
    r_left = 1j * params.epsilon * w.sin_ql / w.denominator
    r_right = r_left * cmath.exp(-2j * p * params.L)
    return ScatteringCoefficients(p=p, t=t, r_left=r_left, r_right=r_right)


def square_well_reflectance(p: float, params: CrystalParams) -> float:
    """R1 = eps^2 sin^2(qL) / (4 p^2 q^2 + eps^2 sin^2(qL)); same from both sides."""
    p = check_momentum(p)
    if params.is_free:
        return 0.0
    w = _well_terms(p, params)
    num = (params.epsilon * w.sin_ql) ** 2
    return num / (4.0 * p * p * w.q * w.q + num)


def reflectance_bound(p: float, epsilon: float) -> float:
    """Thickness-independent upper bound eps^2 / (4 p^2 (p^2 + eps)) on R1."""
    p = check_momentum(p)
    return epsilon * epsilon / (4.0 * p * p * (p * p + epsilon))


def square_well_wavefunction(x, p: float, params: CrystalParams) -> tuple[np.ndarray, np.ndarray]:
    """Left-incident scattering state of the well and its derivative on the whole line."""
    c = square_well_coefficients(p, params)
    p = c.p
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    q = math.sqrt(p * p + params.epsilon)
    tau = c.t * cmath.exp(1j * p * params.L)
    a = tau * (q + p) / (2.0 * q)
    b = tau * (q - p) / (2.0 * q)

    psi = np.empty(xs.shape, dtype=complex)
    dpsi = np.empty(xs.shape, dtype=complex)

    left = xs < 0.0
    xl = xs[left]
    psi[left] = np.exp(1j * p * xl) + c.r_left * np.exp(-1j * p * xl)
    dpsi[left] = 1j * p * (np.exp(1j * p * xl) - c.r_left * np.exp(-1j * p * xl))

    inside = (xs >= 0.0) & (xs <= params.L)
    u = xs[inside] - params.L
    psi[inside] = a * np.exp(1j * q * u) + b * np.exp(-1j * q * u)
    dpsi[inside] = 1j * q * (a * np.exp(1j * q * u) - b * np.exp(-1j * q * u))

    right = xs > params.L
    xr = xs[right]
    psi[right] = c.t * np.exp(1j * p * xr)
    dpsi[right] = 1j * p * c.t * np.exp(1j * p * xr)
    return psi, dpsi


def _left_reflection_factored(p: float, params: CrystalParams) -> complex:
    # r_left with the (k1 - p) zero of sin(qL) cancelled analytically.
    w = _well_terms(p, params)
    dq = (p - params.k1) * (p + params.k1) / (w.q + params.k0)
    sign = -1.0 if params.N % 2 else 1.0
    shape = float(np.sinc(dq * params.L / math.pi))
    eps, length = params.epsilon, params.L
    return -1j * eps * sign * length * (p + params.k1) ** 2 * shape / (
        (w.q + params.k0) * w.denominator
    )


def left_reflection_limit(params: CrystalParams) -> complex:
    """Value of r_left as p -> k1."""
    return -1j * params.epsilon * params.L * params.k1 / (params.k0 * params.k0)


def crystal_coefficients(p: float, params: CrystalParams) -> ScatteringCoefficients:
    """Scattering of the partner crystal, mapped from the well.

    The transmission is the well's own amplitude. Within DELTA_WINDOW*k0 of
    k1 the left reflection is the limit value continued to first order.
    """
    well = square_well_coefficients(p, params)
    if params.is_free:
        return well
    p, k1 = well.p, params.k1
    r_right = well.r_right * (k1 - p) / (k1 + p)

    delta = DELTA_WINDOW * params.k0
    if abs(p - k1) < delta:
        slope = (
            _left_reflection_factored(k1 + delta, params)
            - _left_reflection_factored(k1 - delta, params)
        ) / (2.0 * delta)
        r_left = left_reflection_limit(params) + (p - k1) * slope
    else:
        r_left = well.r_left * (k1 + p) / (k1 - p)
    return ScatteringCoefficients(p=p, t=well.t, r_left=r_left, r_right=r_right)


def crystal_reflectances(p: float, params: CrystalParams) -> tuple[float, float]:
    """(R_left, R_right) of the crystal as R1 times reciprocal rational factors."""
    p = check_momentum(p)
    if params.is_free:
        return 0.0, 0.0
    k1 = params.k1
    r1 = square_well_reflectance(p, params)
    r_right = r1 * ((k1 - p) / (k1 + p)) ** 2
    if abs(p - k1) < DELTA_WINDOW * params.k0:
        return crystal_coefficients(p, params).R_left, r_right
    return r1 * ((k1 + p) / (k1 - p)) ** 2, r_right


def peak_left_reflectance(params: CrystalParams) -> float:
    """Left reflectance at p = k1; grows as the square of the crystal length."""
    eps, k0 = params.epsilon, params.k0
    return eps * eps * params.L * params.L * (1.0 - eps / (k0 * k0)) / (k0 * k0)


def unitarity_defect(c: ScatteringCoefficients) -> float:
    """| |T - 1| - sqrt(R_left R_right) |, zero for a PT-symmetric scatterer."""
    return abs(abs(c.T - 1.0) - math.sqrt(c.R_left * c.R_right))


def max_invisible_epsilon(eta: float, p0: float) -> float:
    """Largest depth keeping R1, R_right and |T - 1| below ``eta`` for all p >= p0.

    Solves eps^2 / (4 p0^2 (p0^2 + eps)) = eta; holds for every thickness.
    """
    p0 = check_momentum(p0)
    if eta <= 0.0:
        raise ValueError("eta must be > 0")
    return 2.0 * p0 * p0 * (eta + math.sqrt(eta * eta + eta))

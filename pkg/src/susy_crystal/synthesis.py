"""Square-well seed, auxiliary solution, superpotential and partner crystal.

All functions accept a scalar or an array of positions and return a value of
the same shape. Positions exactly at 0 or L take the interior branch.

Inside the support the auxiliary solution is evaluated as
``cos(k0 x) + i (k1/k0) sin(k0 x)``, which equals ``mu cos(k0 x - i rho)``
but stays finite for any rho. The partner potential follows from it as
``epsilon (2/phi^2 - 1)``.
"""

import numpy as np

from susy_crystal.params import CrystalParams

ArrayLike = float | np.ndarray


def _positions(x: ArrayLike) -> np.ndarray:
    return np.asarray(x, dtype=float)


def _shaped(values: np.ndarray, x: ArrayLike):
    if np.ndim(x) == 0:
        return complex(values.reshape(()))
    return values


def _regions(x: np.ndarray, params: CrystalParams) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    inside = (x >= 0.0) & (x <= params.L)
    return x < 0.0, inside, x > params.L


def phi(x: ArrayLike, params: CrystalParams):
    """Auxiliary solution at energy E1: plane wave outside, trigonometric inside."""
    xs = _positions(x)
    left, inside, right = _regions(xs, params)
    k0, k1 = params.k0, params.k1
    sign = -1.0 if params.N % 2 else 1.0

    out = np.empty(xs.shape, dtype=complex)
    out[left] = np.exp(1j * k1 * xs[left])
    out[right] = sign * np.exp(1j * k1 * (xs[right] - params.L))
    xi = xs[inside]
    out[inside] = np.cos(k0 * xi) + 1j * (k1 / k0) * np.sin(k0 * xi)
    return _shaped(out, x)


def phi_derivative(x: ArrayLike, params: CrystalParams):
    """First derivative of :func:`phi`."""
    xs = _positions(x)
    left, inside, right = _regions(xs, params)
    k0, k1 = params.k0, params.k1
    sign = -1.0 if params.N % 2 else 1.0

    out = np.empty(xs.shape, dtype=complex)
    out[left] = 1j * k1 * np.exp(1j * k1 * xs[left])
    out[right] = 1j * k1 * sign * np.exp(1j * k1 * (xs[right] - params.L))
    xi = xs[inside]
    out[inside] = -k0 * np.sin(k0 * xi) + 1j * k1 * np.cos(k0 * xi)
    return _shaped(out, x)


def superpotential(x: ArrayLike, params: CrystalParams):
    """W = phi'/phi; constant i*k1 outside the support."""
    xs = _positions(x)
    _, inside, _ = _regions(xs, params)
    out = np.full(xs.shape, 1j * params.k1, dtype=complex)
    xi = xs[inside]
    out[inside] = np.asarray(phi_derivative(xi, params)) / np.asarray(phi(xi, params))
    return _shaped(out, x)


def partner_potential(x: ArrayLike, params: CrystalParams):
    """The PT-symmetric crystal V = W^2 - W' + E1, zero outside (0, L)."""
    xs = _positions(x)
    _, inside, _ = _regions(xs, params)
    out = np.zeros(xs.shape, dtype=complex)
    if not params.is_free:
        f = np.asarray(phi(xs[inside], params))
        out[inside] = params.epsilon * (2.0 / (f * f) - 1.0)
    return _shaped(out, x)


def square_well_potential(x: ArrayLike, params: CrystalParams):
    """The Hermitian seed: -epsilon on (0, L), zero outside."""
    xs = _positions(x)
    _, inside, _ = _regions(xs, params)
    out = np.zeros(xs.shape, dtype=complex)
    out[inside] = -params.epsilon
    return _shaped(out, x)


def shallow_limit_potential(x: ArrayLike, params: CrystalParams, bias: bool = True):
    """Small-epsilon form 2*eps*exp(-2i k0 x) - eps of the partner crystal.

    With ``bias=False`` the constant shift is dropped, giving the plain
    complex sinusoid.
    """
    xs = _positions(x)
    _, inside, _ = _regions(xs, params)
    eps = params.epsilon
    out = np.zeros(xs.shape, dtype=complex)
    out[inside] = 2.0 * eps * np.exp(-2j * params.k0 * xs[inside])
    if bias:
        out[inside] -= eps
    return _shaped(out, x)


def apply_intertwiner(psi, dpsi, W):
    """Map a seed solution onto the partner: xi = -psi' + W psi."""
    return -dpsi + W * psi

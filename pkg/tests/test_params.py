"""Tests for crystal parameter derivation."""

import math

import pytest

from susy_crystal.params import DomainError, check_momentum, derive_params


class TestDeriveParams:
    """Tests for derive_params."""

    def test_shallow_well_values(self):
        """Test rho, mu and k1 for eps=0.01, k0=1."""
        params = derive_params(0.01, 1.0, 100)

        assert params.rho == pytest.approx(math.acosh(10.0), rel=1e-12)
        assert params.rho == pytest.approx(2.9932, abs=1e-3)
        assert params.mu == pytest.approx(0.1, rel=1e-15)
        assert params.k1 == pytest.approx(0.994987437106620, rel=1e-12)

    def test_deeper_well_values(self):
        """Test rho and mu for eps=0.1, k0=1."""
        params = derive_params(0.1, 1.0, 100)

        assert params.rho == pytest.approx(math.acosh(1.0 / math.sqrt(0.1)), rel=1e-12)
        assert params.rho == pytest.approx(1.8184, abs=1e-4)
        assert params.mu == pytest.approx(0.316228, abs=1e-6)

    @pytest.mark.parametrize("epsilon", [1e-8, 1e-4, 0.01, 0.1, 0.5, 0.9])
    def test_continuity_identities(self, epsilon):
        """Test mu*cosh(rho) = 1 and tanh(rho) = k1/k0."""
        params = derive_params(epsilon, 1.0, 1)

        assert params.mu * math.cosh(params.rho) == pytest.approx(1.0, rel=1e-12)
        assert math.tanh(params.rho) == pytest.approx(params.k1 / params.k0, rel=1e-12)

    def test_scales_with_k0(self):
        """Test derived lengths and energies for k0 != 1."""
        params = derive_params(0.5, 2.0, 7)

        assert params.Lambda == pytest.approx(math.pi / 2.0)
        assert params.L == pytest.approx(7 * math.pi / 2.0)
        assert params.E1 == pytest.approx(3.5)
        assert params.k1 == pytest.approx(math.sqrt(3.5))
        assert params.rho == pytest.approx(math.acosh(2.0 / math.sqrt(0.5)), rel=1e-12)

    def test_deep_limit(self):
        """Test that eps -> k0^2 drives rho to 0 and mu to 1."""
        params = derive_params(1.0 - 1e-12, 1.0, 1)

        assert params.rho < 1e-5
        assert params.mu == pytest.approx(1.0, abs=1e-11)

    def test_free_limit(self):
        """Test that eps = 0 is the potential-free limit."""
        params = derive_params(0.0, 1.0, 10)

        assert params.is_free
        assert math.isinf(params.rho)
        assert params.mu == 0.0
        assert params.k1 == 1.0
        assert params.to_dict()["rho"] == "inf"

    def test_rejects_deep_well(self):
        """Test epsilon >= k0^2 is a domain error."""
        with pytest.raises(DomainError, match=r"epsilon must be < k0\^2"):
            derive_params(1.0, 1.0, 1)

    @pytest.mark.parametrize(
        "epsilon,k0,N,message",
        [
            (-0.01, 1.0, 1, "epsilon must be >= 0"),
            (0.01, 0.0, 1, "k0 must be > 0"),
            (0.01, 1.0, 0, "N must be >= 1"),
            (0.01, 1.0, 2.5, "N must be an integer"),
        ],
    )
    def test_rejects_invalid(self, epsilon, k0, N, message):
        """Test every precondition failure names its precondition."""
        with pytest.raises(DomainError, match=message):
            derive_params(epsilon, k0, N)

    def test_domain_error_is_value_error(self):
        """Test DomainError can be caught as ValueError."""
        with pytest.raises(ValueError):
            derive_params(2.0, 1.0, 1)


class TestCheckMomentum:
    """Tests for check_momentum."""

    def test_accepts_positive(self):
        """Test positive momenta pass through as floats."""
        assert check_momentum(1) == 1.0

    @pytest.mark.parametrize("p", [0.0, -1.0, float("nan"), float("inf")])
    def test_rejects_non_positive(self, p):
        """Test non-positive or non-finite momenta are rejected."""
        with pytest.raises(DomainError, match="momentum must be > 0"):
            check_momentum(p)

"""Tests for momentum sweeps and invisibility metrics."""

import numpy as np
import pytest

from susy_crystal import __version__
from susy_crystal.analytic import (
    crystal_coefficients,
    peak_left_reflectance,
    reflectance_bound,
)
from susy_crystal.numeric import ConvergenceError, SlicingSpec
from susy_crystal.params import derive_params
from susy_crystal.profile import PotentialProfile
from susy_crystal.spectra import (
    EmptyBandError,
    Method,
    MomentumGrid,
    SpectrumGrid,
    SweepError,
    invisibility_metrics,
    resolve_threads,
    sweep,
)


def crystal_spectrum(epsilon=0.01, N=100, **grid_kwargs):
    params = derive_params(epsilon, 1.0, N)
    grid = MomentumGrid.band(1.0, refine_centers=(params.k1,), **grid_kwargs)
    return params, sweep(PotentialProfile.susy_crystal(params), grid, threads=2)


class TestMomentumGrid:
    """Tests for band grids with refinement windows."""

    def test_default_band(self):
        """Test the default grid spans 0.6..1.4 with 2001 points."""
        p = MomentumGrid().values()

        assert p.size == 2001
        assert p[0] == 0.6 and p[-1] == 1.4

    def test_band_scales_with_k0(self):
        """Test band() takes 0.6 k0 .. 1.4 k0 unless limits are given."""
        grid = MomentumGrid.band(2.0)
        assert (grid.p_min, grid.p_max) == pytest.approx((1.2, 2.8))

        grid = MomentumGrid.band(2.0, p_min=1.5, points=11)
        assert grid.p_min == 1.5 and grid.points == 11

    def test_refinement_contains_center(self):
        """Test a refinement window adds points and hits its center exactly."""
        k1 = derive_params(0.01, 1.0, 100).k1
        p = MomentumGrid(refine_centers=(k1,)).values()

        assert k1 in p
        assert p.size > 2001
        assert np.all(np.diff(p) > 0)
        assert np.sum(np.abs(p - k1) <= 5e-3) >= 201

    def test_refinement_clipped_to_band(self):
        """Test a window reaching past the band edge adds no points outside it."""
        p = MomentumGrid(p_min=1.0, p_max=1.4, points=11, refine_centers=(0.995,)).values()

        assert p.min() == 1.0
        assert np.all((p >= 1.0) & (p <= 1.4))

    @pytest.mark.parametrize(
        "kwargs",
        [{"p_min": 1.4, "p_max": 0.6}, {"p_min": 0.0}, {"points": 1}],
    )
    def test_rejects_invalid(self, kwargs):
        """Test malformed grids are refused."""
        with pytest.raises(ValueError):
            MomentumGrid(**kwargs)

    def test_to_dict(self):
        """Test the grid descriptor used in provenance."""
        data = MomentumGrid(points=5, refine_centers=(1.0,)).to_dict()

        assert data["points"] == 5
        assert data["refine_centers"] == [1.0]


class TestSweep:
    """Tests for sweeping profiles over a grid."""

    def test_well_oscillates_under_bound(self):
        """Test R1 oscillates with zeros and stays under the bound."""
        params = derive_params(0.1, 1.0, 100)
        spectrum = sweep(PotentialProfile.square_well(params), MomentumGrid(), threads=1)
        r1 = spectrum.R_left

        bound = np.array([reflectance_bound(p, 0.1) for p in spectrum.p_values])
        assert np.all(r1 <= bound)
        assert r1.min() < 0.01 * r1.max()
        np.testing.assert_allclose(spectrum.R_right, r1, rtol=1e-12)

    def test_free_crystal(self):
        """Test eps = 0 transmits fully everywhere."""
        params = derive_params(0.0, 1.0, 100)
        spectrum = sweep(PotentialProfile.susy_crystal(params), MomentumGrid(points=101))

        assert np.all(spectrum.T == 1.0)
        assert np.all(spectrum.R_left == 0.0)
        assert np.all(spectrum.R_right == 0.0)

    def test_analytic_needs_closed_form(self):
        """Test the sinusoids have no analytic method."""
        profile = PotentialProfile.sinusoidal(derive_params(0.01, 1.0, 10))
        with pytest.raises(ValueError, match="no analytic solution"):
            sweep(profile, MomentumGrid(points=11))

    def test_rows_follow_grid(self):
        """Test rows are in grid order and match direct evaluation."""
        params, spectrum = crystal_spectrum(points=51)

        np.testing.assert_array_equal([row.p for row in spectrum.rows], spectrum.p_values)
        row = spectrum.rows[7]
        assert row == crystal_coefficients(row.p, params)

    def test_independent_of_threads(self):
        """Test thread count never changes the result."""
        params = derive_params(0.01, 1.0, 100)
        profile = PotentialProfile.susy_crystal(params)
        grid = MomentumGrid(points=301, refine_centers=(params.k1,))

        single = sweep(profile, grid, threads=1)
        multi = sweep(profile, grid, threads=4)
        assert single == multi
        np.testing.assert_array_equal(single.p_values, multi.p_values)

    def test_provenance(self):
        """Test provenance records version, method, profile and grid."""
        profile = PotentialProfile.susy_crystal(derive_params(0.1, 1.0, 10))
        analytic = sweep(profile, MomentumGrid(points=5))
        numeric = sweep(profile, MomentumGrid(points=5), Method.NUMERIC)

        assert analytic.provenance["version"] == __version__
        assert analytic.provenance["method"] == "analytic"
        assert analytic.provenance["profile"]["kind"] == "susy"
        assert analytic.provenance["grid"]["points"] == 5
        assert "slicing" not in analytic.provenance
        assert numeric.provenance["slicing"]["slices_per_period"] == 64

    def test_methods_agree(self):
        """Test analytic and numeric sweeps agree on a small crystal."""
        profile = PotentialProfile.susy_crystal(derive_params(0.1, 1.0, 10))
        grid = MomentumGrid(points=21)
        analytic = sweep(profile, grid)
        numeric = sweep(profile, grid, Method.NUMERIC)

        for name in ("T", "R_left", "R_right"):
            a, n = analytic.column(name), numeric.column(name)
            assert np.max(np.abs(n - a) / np.maximum(1.0, np.abs(a))) < 1e-6

    def test_wraps_point_failures(self):
        """Test a failing point surfaces as SweepError chained to its cause."""
        profile = PotentialProfile.susy_crystal(derive_params(0.1, 1.0, 10))
        spec = SlicingSpec(convergence_tol=1e-15, max_doublings=1)

        with pytest.raises(SweepError, match="at p=0.6") as exc_info:
            sweep(profile, MomentumGrid(points=2), Method.NUMERIC, spec, threads=1)
        assert isinstance(exc_info.value.__cause__, ConvergenceError)
        assert exc_info.value.p == 0.6

    @pytest.mark.slow
    def test_thick_crystal_methods_agree(self):
        """Test analytic and numeric agree for N = 5000 around k1."""
        params = derive_params(0.01, 1.0, 5000)
        profile = PotentialProfile.susy_crystal(params)
        grid = MomentumGrid(p_min=0.98, p_max=1.02, points=41, refine_centers=(params.k1,),
                            refine_halfwidth=1e-4, refine_points=11)
        analytic = sweep(profile, grid)
        numeric = sweep(profile, grid, Method.NUMERIC)

        for name in ("T", "R_left", "R_right"):
            a, n = analytic.column(name), numeric.column(name)
            assert np.max(np.abs(n - a) / np.maximum(1.0, np.abs(a))) < 1e-5


class TestSpectrumGrid:
    """Tests for spectrum validation."""

    def test_rejects_unsorted(self):
        """Test momenta must strictly increase."""
        rows = tuple(crystal_coefficients(p, derive_params(0.1, 1.0, 2)) for p in (1.0, 0.9))
        with pytest.raises(ValueError, match="strictly increasing"):
            SpectrumGrid(
                p_values=np.array([1.0, 0.9]), rows=rows, method=Method.ANALYTIC,
                profile={}, provenance={},
            )

    def test_rejects_length_mismatch(self):
        """Test rows and momenta pair one to one."""
        with pytest.raises(ValueError, match="one to one"):
            SpectrumGrid(
                p_values=np.array([1.0]), rows=(), method=Method.ANALYTIC,
                profile={}, provenance={},
            )


class TestInvisibilityMetrics:
    """Tests for band extrema."""

    @pytest.mark.parametrize("N", [100, 1000, 5000])
    def test_unidirectional_invisibility(self, N):
        """Test R_right and |T - 1| stay small while R_left peaks at k1."""
        params, spectrum = crystal_spectrum(N=N)
        report = invisibility_metrics(spectrum)

        assert report.sup_R_right <= reflectance_bound(0.6, 0.01) < 2e-4
        assert report.sup_abs_T_minus_1 < 2e-4
        assert report.max_R_left == pytest.approx(peak_left_reflectance(params), rel=1e-3)
        assert abs(report.argmax_R_left - params.k1) < 2e-4
        assert report.points == spectrum.p_values.size

    def test_peak_grows_with_thickness(self):
        """Test the left peak grows monotonically with N."""
        peaks = [invisibility_metrics(crystal_spectrum(N=n)[1]).max_R_left
                 for n in (100, 1000, 5000)]
        assert peaks[0] < peaks[1] < peaks[2]
        assert peaks[1] / peaks[0] == pytest.approx(100.0, rel=1e-2)

    def test_insensitive_to_grid_density(self):
        """Test doubling the grid density barely moves the extrema."""
        coarse = invisibility_metrics(crystal_spectrum(points=1001)[1])
        fine = invisibility_metrics(crystal_spectrum(points=2001)[1])

        assert fine.max_R_left == pytest.approx(coarse.max_R_left, rel=1e-3)
        assert 0.5 < fine.sup_R_right / coarse.sup_R_right < 2.0

    def test_sub_band(self):
        """Test a band away from k1 excludes the peak."""
        params, spectrum = crystal_spectrum()
        report = invisibility_metrics(spectrum, band=(1.1, 1.4))

        assert report.band == (1.1, 1.4)
        assert report.argmax_R_left >= 1.1
        assert report.max_R_left < peak_left_reflectance(params)

    def test_band_outside_grid(self):
        """Test a band reaching past the grid is refused."""
        _, spectrum = crystal_spectrum(points=11)
        with pytest.raises(ValueError, match="outside the grid"):
            invisibility_metrics(spectrum, band=(0.5, 1.0))

    def test_inverted_band(self):
        """Test lo > hi is refused."""
        _, spectrum = crystal_spectrum(points=11)
        with pytest.raises(ValueError, match="exceeds"):
            invisibility_metrics(spectrum, band=(1.2, 1.0))

    def test_empty_band(self):
        """Test a band between grid points has nothing to report."""
        params = derive_params(0.1, 1.0, 10)
        spectrum = sweep(PotentialProfile.susy_crystal(params), MomentumGrid(points=3))
        with pytest.raises(EmptyBandError):
            invisibility_metrics(spectrum, band=(0.7, 0.8))


class TestResolveThreads:
    """Tests for worker-count resolution."""

    def test_explicit_wins(self, monkeypatch):
        """Test an explicit count overrides the environment."""
        monkeypatch.setenv("SUSY_CRYSTAL_THREADS", "3")
        assert resolve_threads(2) == 2

    def test_environment(self, monkeypatch):
        """Test SUSY_CRYSTAL_THREADS is used when no count is given."""
        monkeypatch.setenv("SUSY_CRYSTAL_THREADS", "3")
        assert resolve_threads() == 3

    def test_cpu_count_fallback(self, monkeypatch):
        """Test the CPU count is the last resort."""
        monkeypatch.delenv("SUSY_CRYSTAL_THREADS", raising=False)
        assert resolve_threads() >= 1

    def test_rejects_bad_values(self, monkeypatch):
        """Test malformed or non-positive counts are refused."""
        monkeypatch.setenv("SUSY_CRYSTAL_THREADS", "many")
        with pytest.raises(ValueError, match="must be an integer"):
            resolve_threads()
        with pytest.raises(ValueError, match=">= 1"):
            resolve_threads(0)

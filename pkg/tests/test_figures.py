"""Tests for figure datasets."""

import numpy as np
import pytest

from susy_crystal.analytic import reflectance_bound
from susy_crystal.figures import FIGURE_IDS, FigureError, figure_data
from susy_crystal.numeric import SlicingSpec


class TestPotentialFigure:
    """Tests for the one-cell potential figure."""

    def test_tables(self):
        """Test one table per depth with x, V_re, V_im columns."""
        fig = figure_data(1)

        assert fig.figure_id == 1
        assert [t.label for t in fig.tables] == ["eps0.1", "eps0.01"]
        for table in fig.tables:
            assert table.columns == ("x", "V_re", "V_im")
            assert table.data.shape == (513, 3)

    def test_starts_real(self):
        """Test V(0) = eps is real."""
        table = figure_data(1).table("eps0.1")
        assert table.data[0, 1] == pytest.approx(0.1)
        assert table.data[0, 2] == pytest.approx(0.0, abs=1e-15)

    @pytest.mark.parametrize("label", ["eps0.1", "eps0.01"])
    def test_pt_symmetric(self, label):
        """Test V(Lambda - x) = conj(V(x)) across the cell."""
        data = figure_data(1).table(label).data
        np.testing.assert_allclose(data[::-1, 1], data[:, 1], atol=1e-12)
        np.testing.assert_allclose(data[::-1, 2], -data[:, 2], atol=1e-12)

    def test_samples_override(self):
        """Test the sample count can be changed."""
        fig = figure_data(1, {"samples": 64, "epsilon": 0.05})

        assert [t.label for t in fig.tables] == ["eps0.05"]
        assert fig.tables[0].data.shape == (65, 3)


class TestWellFigure:
    """Tests for the square-well reflectance figure."""

    def test_under_bound(self):
        """Test both curves stay under the thickness-free bound."""
        fig = figure_data(2)

        assert [t.label for t in fig.tables] == ["R1_eps0.1", "R1_eps0.01"]
        for table, eps in zip(fig.tables, (0.1, 0.01)):
            assert table.columns == ("p", "R1")
            bound = np.array([reflectance_bound(p, eps) for p in table.data[:, 0]])
            assert np.all(table.data[:, 1] <= bound)

    def test_grid_override(self):
        """Test points and depth overrides reach the sweep and provenance."""
        fig = figure_data(2, {"epsilon": 0.05, "points": 11})

        assert fig.tables[0].label == "R1_eps0.05"
        assert fig.tables[0].data.shape == (11, 2)
        assert fig.provenance == {"epsilon": 0.05, "points": 11}


class TestCrystalFigure:
    """Tests for the crystal reflectance figure."""

    def test_tables(self):
        """Test R_left, R_right and T for each thickness."""
        fig = figure_data(3)
        assert [t.label for t in fig.tables] == [
            f"{name}_N{n}" for n in (100, 1000, 5000) for name in ("Rl", "Rr", "T")
        ]

    @pytest.mark.parametrize("N,peak", [(100, 9.771), (1000, 977.1), (5000, 2.443e4)])
    def test_left_peaks(self, N, peak):
        """Test the left reflectance peaks grow with N."""
        table = figure_data(3, {"N": N}).table(f"Rl_N{N}")
        assert table.data[:, 1].max() == pytest.approx(peak, rel=1e-3)

    def test_right_and_transmission_flat(self):
        """Test R_right and |T - 1| stay below 2e-4 for the thickest crystal."""
        fig = figure_data(3, {"N": 5000})

        assert fig.table("Rr_N5000").data[:, 1].max() < 2e-4
        assert np.abs(fig.table("T_N5000").data[:, 1] - 1.0).max() < 2e-4


class TestSinusoidFigure:
    """Tests for the numeric sinusoid comparison."""

    @pytest.mark.slow
    def test_shift_restores_transparency(self):
        """Test the plain sinusoid departs from T = 1 while the shifted one does not."""
        fig = figure_data(4, {"points": 401})
        plain = fig.table("T_sin").data[:, 1]
        shifted = fig.table("T_sin-shifted").data[:, 1]

        assert np.abs(plain - 1.0).max() > 0.2
        assert np.abs(shifted - 1.0).max() < 0.05

    def test_small_crystal(self):
        """Test the figure runs for a thin crystal and records the slicing."""
        spec = SlicingSpec(slices_per_period=32)
        fig = figure_data(4, {"N": 10, "points": 5, "slicing": spec})

        assert [t.label for t in fig.tables] == ["T_sin", "T_sin-shifted"]
        assert fig.provenance["slicing"] == spec.to_dict()
        assert fig.provenance["N"] == 10


class TestFigureData:
    """Tests for figure selection."""

    @pytest.mark.parametrize("figure_id", [0, 5])
    def test_unknown_figure(self, figure_id):
        """Test only 1..4 exist."""
        with pytest.raises(FigureError, match="figure must be one of"):
            figure_data(figure_id)

    def test_ids(self):
        """Test the published figure numbers."""
        assert FIGURE_IDS == (1, 2, 3, 4)

    def test_missing_table(self):
        """Test looking up an unknown label."""
        with pytest.raises(KeyError):
            figure_data(1).table("eps0.5")

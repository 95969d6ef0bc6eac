"""susy-crystal - SUSY-synthesized PT-symmetric crystals and their scattering spectra."""

__version__ = "0.1.0"

from susy_crystal.analytic import (  # noqa: E402
    ScatteringCoefficients,
    crystal_coefficients,
    crystal_reflectances,
    max_invisible_epsilon,
    peak_left_reflectance,
    square_well_coefficients,
    square_well_reflectance,
    square_well_wavefunction,
    unitarity_defect,
)
from susy_crystal.config import ConfigError, RunConfig  # noqa: E402
from susy_crystal.figures import FigureData, Table, figure_data  # noqa: E402
from susy_crystal.numeric import (  # noqa: E402
    ConvergenceError,
    GridTooCoarseError,
    NumericResult,
    SlicingSpec,
    TransferMatrix,
    monodromy,
    scatter_numeric,
    schrodinger_residual,
    slice_matrix,
    solve_numeric,
)
from susy_crystal.params import CrystalParams, DomainError, derive_params  # noqa: E402
from susy_crystal.profile import PotentialKind, PotentialProfile  # noqa: E402
from susy_crystal.spectra import (  # noqa: E402
    EmptyBandError,
    InvisibilityReport,
    Method,
    MomentumGrid,
    SpectrumGrid,
    SweepError,
    invisibility_metrics,
    sweep,
)
from susy_crystal.synthesis import (  # noqa: E402
    apply_intertwiner,
    partner_potential,
    phi,
    phi_derivative,
    shallow_limit_potential,
    superpotential,
)

__all__ = [
    # Parameters
    "CrystalParams",
    "DomainError",
    "derive_params",
    # Synthesis
    "phi",
    "phi_derivative",
    "superpotential",
    "partner_potential",
    "shallow_limit_potential",
    "apply_intertwiner",
    "PotentialKind",
    "PotentialProfile",
    # Analytic scattering
    "ScatteringCoefficients",
    "square_well_coefficients",
    "square_well_reflectance",
    "square_well_wavefunction",
    "crystal_coefficients",
    "crystal_reflectances",
    "peak_left_reflectance",
    "unitarity_defect",
    "max_invisible_epsilon",
    # Numeric scattering
    "TransferMatrix",
    "SlicingSpec",
    "NumericResult",
    "slice_matrix",
    "monodromy",
    "solve_numeric",
    "scatter_numeric",
    "schrodinger_residual",
    "ConvergenceError",
    "GridTooCoarseError",
    # Spectra
    "Method",
    "MomentumGrid",
    "SpectrumGrid",
    "InvisibilityReport",
    "sweep",
    "invisibility_metrics",
    "EmptyBandError",
    "SweepError",
    "FigureData",
    "Table",
    "figure_data",
    # Config
    "RunConfig",
    "ConfigError",
    # Version
    "__version__",
]

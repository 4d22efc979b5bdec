"""modhom: two-photon interference in a modified Hong-Ou-Mandel interferometer.

Temporal and spectrally resolved coincidence simulation for Gaussian
biphoton sources, cross-validated through three independent routes
(closed form, frequency-domain quadrature, time-domain joint-temporal-
intensity integration), plus the frequency-comb analysis used for
high-dimensional frequency entanglement.

Units: angular frequencies in rad/ps, times in ps (see ``modhom.model``).
"""

from .comb import (
    CombReport,
    DipCharacterization,
    Tooth,
    characterize_from_dips,
    comb_report,
    count_teeth,
    design_tau0,
    dominant_axis,
    marginal_spectrum,
    refine_extremum,
)
from .errors import (
    CoherenceTimeWarning,
    ContractViolationError,
    InvalidInputError,
    ModhomError,
    ResolutionError,
    TargetNotFoundError,
    WindowError,
)
from .interferogram import (
    Interferogram,
    QuadratureSpec,
    RateMethod,
    g_fourier,
    g_fourier_numeric,
    gaussian_cpd_baseline,
    rate_cw_quadrature,
    rate_modified_cw,
    rate_modified_pulsed,
    rate_modified_quadrature,
    scan,
    visibility_parameters,
)
from .kernels import (
    cpd_cw,
    cpd_modified,
    cpd_modified_raw,
    cpd_modified_zero_delay,
    cpd_noon,
    cpd_standard_hom,
)
from .maps import (
    MapKind,
    SpectralMap,
    Spectrum1D,
    conjugate_time_map,
    freq_delay_map,
    jsi_map,
    project,
    spectral_map,
)
from .model import (
    AxisKind,
    GaussianTpsa,
    Grid1D,
    Grid2D,
    InterferometerConfig,
    PumpRegime,
    SourceModel,
    coherence_time,
    signal_idler_from_sum_diff,
    sum_diff_from_signal_idler,
    tpsa_eval,
)
from .timedomain import (
    TemporalAmplitude,
    default_time_grids,
    jti,
    jti_baseline,
    jti_term_groups,
    rate_from_jti,
    temporal_amplitude,
    temporal_amplitude_numeric,
)

__version__ = "0.1.0"

__all__ = [
    "AxisKind", "CoherenceTimeWarning", "CombReport", "ContractViolationError",
    "DipCharacterization", "GaussianTpsa", "Grid1D", "Grid2D", "Interferogram",
    "InterferometerConfig", "InvalidInputError", "MapKind", "ModhomError",
    "PumpRegime", "QuadratureSpec", "RateMethod", "ResolutionError",
    "SourceModel", "SpectralMap", "Spectrum1D", "TargetNotFoundError",
    "TemporalAmplitude", "Tooth", "WindowError",
    "characterize_from_dips", "coherence_time", "comb_report",
    "conjugate_time_map", "count_teeth", "cpd_cw", "cpd_modified",
    "cpd_modified_raw", "cpd_modified_zero_delay", "cpd_noon",
    "cpd_standard_hom", "default_time_grids", "design_tau0", "dominant_axis",
    "freq_delay_map", "g_fourier", "g_fourier_numeric",
    "gaussian_cpd_baseline", "jsi_map", "jti", "jti_baseline",
    "jti_term_groups", "marginal_spectrum", "project", "rate_cw_quadrature",
    "rate_from_jti", "rate_modified_cw", "rate_modified_pulsed",
    "rate_modified_quadrature", "refine_extremum", "scan",
    "signal_idler_from_sum_diff", "spectral_map", "sum_diff_from_signal_idler",
    "temporal_amplitude", "temporal_amplitude_numeric", "tpsa_eval",
    "visibility_parameters",
]

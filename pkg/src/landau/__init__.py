"""Inter-Landau-level transition probabilities for a charged particle in a
uniform magnetic field driven by a finite-duration planar electric field.

Pipeline: field ``E(t)`` -> drive parameter ``u`` (Fourier integral at the
cyclotron frequency) -> intensity ``x = |u k|^2`` -> Laguerre survival and
displacement-operator transition probabilities.  :mod:`landau.oracle`
re-derives the same numbers by brute force in a truncated number basis.
"""

from .errors import (
    ConfigError,
    DomainError,
    EvaluationError,
    FieldParseError,
    FieldValidationError,
    LaguerreOverflowError,
    NumericalError,
    ParameterError,
    StepSizeError,
    TruncationError,
)
from .fields import (
    Constant,
    FieldSpec,
    GaussianPulse,
    Sampled,
    SampledField,
    Sinusoid,
    SquarePulse,
    WhiteNoise,
    complex_field,
    eval_field,
    load_sampled_field,
)
from .fourier import DriveParameter, QuadratureSettings, compute_u, u_spectrum_sweep
from .geometry import GeometricPhases, PlanarPath, closed_area, drift_path, phases
from .laguerre import (
    assoc_laguerre,
    assoc_laguerre_scaled,
    fejer_asymptotic,
    laguerre,
    laguerre_scaled,
    laguerre_sequence,
    normalized_assoc_laguerre,
)
from .physics import DerivedScales, PhysicalParams, derive_scales, intensity_from_u
from .transitions import (
    SurvivalResult,
    TransitionTable,
    alpha_from_u,
    displacement_element,
    displacement_row,
    survival,
    survival_fejer,
    sweep_over_intensity,
    sweep_over_levels,
    transition_matrix,
)

__version__ = "0.1.0"

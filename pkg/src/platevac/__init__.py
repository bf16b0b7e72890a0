"""Vacuum fluctuations of a massless scalar field between parallel plates.

Computes the regularized field and derivative fluctuations, the
canonical and conformally improved energy-momentum tensor components,
and the global Casimir energy and pressure for Dirichlet or Neumann
plates, cross-validating every closed form against independent
brute-force summation oracles.
"""

from .casimir import (
    GlobalResult,
    canonical_density_integral,
    em_reference,
    global_result,
    integrated_density_check,
    pressure,
    total_energy,
)
from .dimreg import MasterIntegralSpec, gamma_real, master_integral, quadrature_reference
from .errors import (
    ConsistencyError,
    DomainError,
    ExtrapolationDivergenceError,
    IllConditionedFitError,
    InvalidConfigError,
    PlateVacError,
    PoleError,
    QuadratureError,
    TruncationError,
)
from .fluctuations import (
    ABPair,
    FluctuationSet,
    InteriorPoint,
    ab_values,
    expectation_set,
    phi_squared,
    phi_squared_single_plate,
)
from .oracle import ModeSumSpec, Observable, mode_sum_finite_part, transverse_integral_unit_test
from .regsum import (
    EpsilonSchedule,
    FinitePartResult,
    abel_sum_oracle,
    bernoulli,
    cutoff_sum_oracle,
    f_theta,
    trig_sum_n3_cos,
    trig_sum_n_cos,
    zeta_neg_int,
)
from .spectrum import (
    BoundaryCondition,
    ModeIndex,
    PlateConfig,
    k_n,
    mode_profile,
    omega,
    orthonormality_check,
)
from .stress import (
    FieldType,
    StressReport,
    TensorForm,
    brown_maclay_form,
    canonical_T00,
    huggins_delta_T00,
    improved_energy_density,
    stress_report,
    t_zz,
    traces,
)

__version__ = "0.1.0"

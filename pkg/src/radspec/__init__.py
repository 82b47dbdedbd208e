"""Eigenvalues, smooth P-representation and spectral bounds for power-law
and logarithmic central potentials (units with the kinetic operator -Delta)."""

from .envelope import (
    GAUSSIAN_MU,
    GAUSSIAN_NU,
    BoundSpec,
    TangentCoefficients,
    bound_spec,
    coulomb_linear_energy,
    energy_from_lambda,
    envelope_bound,
    gaussian_ground_energy,
    lambda_from_energy,
    omega_split_lower_bound,
    power_sum_energy,
    scale_coulomb_linear,
    tangent_coefficients,
    tangential_spectral_function,
)
from .interpolation import (
    AnchorSet,
    PCurve,
    Table1Row,
    anchors_for_state,
    build_cubic,
    interpolated_energy,
    table1,
)
from .nbody import (
    JacobiFrame,
    NBodyModel,
    QuarkSweepPoint,
    ReducedProblem,
    build_jacobi_frame,
    nbody_energy_bounds,
    pair_sum_identity_check,
    quark_model_sweep,
    reduce_to_one_body,
)
from .pnumbers import (
    KineticPotentialSample,
    PNumber,
    SpectralFunctionSample,
    energy_from_p,
    energy_from_p_log,
    k_function,
    kinetic_potential_log,
    kinetic_potential_power,
    legendre_pair,
    p_from_energy,
    p_log_from_energy,
    semiclassical_energy,
    spectral_from_kinetic,
)
from .potentials import (
    PotentialError,
    QuantumNumbers,
    RadialPotential,
    evaluate_potential,
    parse_potential,
)
from .solver import (
    EigenResult,
    EigenSolveConfig,
    EigensolverError,
    scale_log_eigenvalue,
    scale_power_eigenvalue,
    solve_radial,
)

__version__ = "0.1.0"

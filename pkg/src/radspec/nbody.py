"""Reduction of N identical particles to a one-body problem and energy bounds.

For translation-invariant spatially-symmetric states, the mean energy of
the N-body Hamiltonian with pair potentials equals that of a reduced
two-particle operator; with orthogonal Jacobi relative coordinates this
yields the lower bound chain

    (N-1) * E_min[ -(hbar^2/m) Delta + (N/2) V(r) ]  <=  ground energy

and a matching Gaussian upper bound, since a symmetric Gaussian trial
state factorizes across the relative coordinates.  The two collapse to
the same value for harmonic pair forces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .minimize import minimize_positive
from .envelope import (
    bound_spec,
    coulomb_linear_energy,
    gaussian_ground_energy,
    power_sum_energy,
    scale_coulomb_linear,
    _base_power_energy,
)
from .pnumbers import p_from_energy, p_log_from_energy
from .potentials import QuantumNumbers, RadialPotential
from .solver import EigenSolveConfig, solve_radial


@dataclass(frozen=True)
class JacobiFrame:
    """Orthogonal N x N frame: row 1 the center of mass, rows 2..N the
    relative coordinates, with rho_2 = (r_1 - r_2)/sqrt(2)."""

    matrix: np.ndarray

    @property
    def n_bodies(self) -> int:
        return self.matrix.shape[0]


def build_jacobi_frame(n_bodies: int) -> JacobiFrame:
    """Unit-row orthogonal frame; row k >= 2 averages the first k-1
    particles against the k-th (the standard Jacobi ladder)."""
    if n_bodies < 2:
        raise ValueError("need at least two bodies")
    b = np.zeros((n_bodies, n_bodies))
    b[0, :] = 1.0 / math.sqrt(n_bodies)
    for k in range(2, n_bodies + 1):
        norm = math.sqrt(k * (k - 1))
        b[k - 1, : k - 1] = 1.0 / norm
        b[k - 1, k - 1] = -(k - 1) / norm
    return JacobiFrame(matrix=b)


def pair_sum_identity_check(
    frame: JacobiFrame, positions: Sequence[np.ndarray]
) -> tuple[float, float]:
    """Evaluate both sides of

        sum_{j>i} (r_i - r_j)^2  =  N * sum_{k>=2} rho_k^2

    for an arbitrary configuration; returns (lhs, rhs)."""
    r = np.asarray(positions, dtype=float)
    n = frame.n_bodies
    if r.shape[0] != n:
        raise ValueError(f"expected {n} position vectors, got {r.shape[0]}")
    lhs = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            d = r[i] - r[j]
            lhs += float(d @ d)
    rho = frame.matrix @ r
    rhs = float(n * np.sum(rho[1:] ** 2))
    return lhs, rhs


@dataclass(frozen=True)
class NBodyModel:
    """N identical particles of mass m with a central pair interaction.

    Either give the pair potential as a shape with depth/range parameters
    (v0, range_a, shape) or, for the quark-model runs, directly as the
    Coulomb-plus-linear coefficients (coulomb_a, linear_b).  The Coulomb
    coupling is named coulomb_a to keep it apart from the range range_a.
    """

    n_bodies: int
    mass: float
    v0: float | None = None
    range_a: float | None = None
    shape: RadialPotential | None = None
    coulomb_a: float | None = None
    linear_b: float | None = None
    hbar: float = 1.0

    def __post_init__(self):
        if self.n_bodies < 2:
            raise ValueError("need at least two bodies")
        if self.mass <= 0.0 or self.hbar <= 0.0:
            raise ValueError("mass and hbar must be positive")
        shape_form = self.shape is not None
        cornell_form = self.coulomb_a is not None or self.linear_b is not None
        if shape_form == cornell_form:
            raise ValueError("give either (v0, range_a, shape) or (coulomb_a, linear_b)")
        if shape_form and (self.v0 is None or self.range_a is None):
            raise ValueError("shape form needs v0 and range_a")

    @property
    def is_cornell(self) -> bool:
        return self.shape is None


@dataclass(frozen=True)
class ReducedProblem:
    """Dimensionless one-body problem -Delta + v f(r) plus the affine map
    back to the physical N-body energy."""

    v: float
    energy_scale: float  # (N-1) hbar^2 / (m a^2)
    shape: RadialPotential

    def to_physical(self, e_dimensionless: float) -> float:
        return self.energy_scale * e_dimensionless

    def from_physical(self, energy: float) -> float:
        return energy / self.energy_scale


def reduce_to_one_body(model: NBodyModel) -> ReducedProblem:
    """Dimensionless coupling v = N m V0 a^2 / (2 hbar^2) and the energy
    map E_physical = (N-1) hbar^2/(m a^2) * F(v)."""
    if model.is_cornell:
        raise ValueError("the Cornell form bypasses the (V0, a) reduction; use nbody_energy_bounds")
    v = model.n_bodies * model.mass * model.v0 * model.range_a**2 / (2.0 * model.hbar**2)
    scale = (model.n_bodies - 1) * model.hbar**2 / (model.mass * model.range_a**2)
    return ReducedProblem(v=v, energy_scale=scale, shape=model.shape)


_GROUND = QuantumNumbers(1, 0)


def _ground_p_value(q: float) -> float:
    """P(q) of the (1,0) state: exact at the endpoints, solved otherwise."""
    return p_from_energy(q, _base_power_energy(q, 1, 0)).value


def _reduced_bounds_dimensionless(shape: RadialPotential, v: float) -> tuple[float, float]:
    """(lower, upper) for the bottom of -Delta + v*shape(r).

    Lower by the kinetic-potential sum rule (exact for one term), upper by
    the scale-optimized Gaussian; evaluated on the scaled shape so
    arbitrary power/log combinations are accepted.
    """
    scaled = shape.scaled(v)
    terms = []
    p_assign = {}
    for c, q in scaled.power_terms:
        sign = 1.0 if q > 0 else -1.0
        a_q = c * sign  # positive weight of sgn(q) r^q
        if a_q <= 0.0:
            raise ValueError("sum-rule lower bound needs attraction/confinement-signed terms")
        terms.append((a_q, q))
        p_assign[q] = _ground_p_value(q)
    if scaled.log_coefficient != 0.0:
        # fold the log term into the same minimization with its own P
        p_log = p_log_from_energy(
            solve_radial(RadialPotential.log(), _GROUND, EigenSolveConfig()).energy
        ).value
        c_log = scaled.log_coefficient

        def obj(r: float) -> float:
            val = 1.0 / (r * r) + c_log * math.log(p_log * r)
            for a_q, q in terms:
                val += a_q * math.copysign(1.0, q) * (p_assign[q] * r) ** q
            return val

        _, lower = minimize_positive(obj, 1e-8, 1e8)
    else:
        lower = power_sum_energy(terms, p_assign)
    upper, _ = gaussian_ground_energy(scaled)
    return lower, upper


def nbody_energy_bounds(model: NBodyModel) -> tuple[float, float]:
    """(lower, upper) on the N-body symmetric ground energy.

    Cornell pair shape: both bounds run through the one-body scaling map
    with (nu, mu) = (1, P_10(1)) for the lower and the Gaussian constants
    for the upper.  Other shapes use the sum rule and the direct Gaussian
    optimization on the reduced problem.
    """
    n = model.n_bodies
    omega = model.hbar**2 / model.mass
    if model.is_cornell:
        a_c = model.coulomb_a or 0.0
        b = model.linear_b or 0.0
        a_eff = n * a_c / 2.0
        b_eff = n * b / 2.0
        if a_eff <= 0.0:
            raise ValueError("the Cornell scaling map needs a positive Coulomb coefficient")
        prefactor, lam = scale_coulomb_linear(omega, a_eff, b_eff)
        lower = (n - 1) * prefactor * coulomb_linear_energy(
            1.0, lam, bound_spec("sum_approximation", _GROUND)
        )
        upper = (n - 1) * prefactor * coulomb_linear_energy(
            1.0, lam, bound_spec("gaussian_upper", _GROUND)
        )
    else:
        reduced = reduce_to_one_body(model)
        lo_dim, up_dim = _reduced_bounds_dimensionless(reduced.shape, reduced.v)
        lower = reduced.to_physical(lo_dim)
        upper = reduced.to_physical(up_dim)
    # collapse cases make the two sides equal to roundoff; only a genuine
    # inversion is an internal error
    slack = 1e-10 * max(abs(lower), abs(upper), 1.0)
    if lower > upper + slack:
        raise RuntimeError(
            f"bound ordering violated: lower {lower} > upper {upper} "
            f"(internal inconsistency)"
        )
    return (lower, upper) if lower <= upper else (upper, upper)


@dataclass(frozen=True)
class QuarkSweepPoint:
    n_bodies: int
    linear_b: float
    lower: float
    upper: float
    exact: bool  # True for N = 2, where the reduction is exact


def quark_model_sweep(
    n_list: Sequence[int],
    mass: float,
    coulomb_a: float,
    b_grid: Sequence[float],
    hbar: float = 1.0,
    cfg: EigenSolveConfig | None = None,
) -> list[QuarkSweepPoint]:
    """Energy curves versus the linear coupling for each particle number.

    For N = 2 the reduction is exact, so the single curve is the direct
    eigensolve of the reduced operator (lower = upper = exact value).
    """
    cfg = cfg or EigenSolveConfig()
    rows = []
    for n in n_list:
        if n < 2:
            raise ValueError("need at least two bodies")
        omega = hbar * hbar / mass
        for b in b_grid:
            if b <= 0.0:
                raise ValueError("b grid must be positive")
            if n == 2:
                prefactor, lam = scale_coulomb_linear(omega, coulomb_a, b)
                res = solve_radial(
                    RadialPotential.coulomb_plus_linear(1.0, lam), _GROUND, cfg
                )
                e = prefactor * res.energy
                rows.append(QuarkSweepPoint(n, b, e, e, True))
            else:
                model = NBodyModel(
                    n_bodies=n, mass=mass, coulomb_a=coulomb_a, linear_b=b, hbar=hbar
                )
                lo, up = nbody_energy_bounds(model)
                rows.append(QuarkSweepPoint(n, b, lo, up, False))
    return rows

"""Spectral bounds for linear combinations of power-law potentials.

Three bound families for the Coulomb-plus-linear shape -a/r + b*r, all
expressed through a single minimization

    E ~ min over r of [ 1/r^2 - a/(nu*r) + b*mu*r ]

with (nu, mu) selecting the mode: Coulomb tangential envelopes give a
lower bound, linear envelopes an upper bound, the kinetic-potential sum
rule an approximation (a lower bound at the bottom of each angular
momentum subspace), and scale-optimized Gaussian constants a ground-state
upper bound.  The general tangential-envelope construction, the
omega-split lower bound, the power-sum recipe, and the closed-form
coupling inverse lambda(E) live here too.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Literal

from scipy.special import digamma, gammaln

from .minimize import maximize_on_unit_interval, minimize_by_derivative, minimize_positive
from .pnumbers import PNumber, _pval, p_from_energy
from .potentials import QuantumNumbers, RadialPotential
from .solver import EigenSolveConfig, scale_power_eigenvalue, solve_radial

GAUSSIAN_NU = math.sqrt(3.0 * math.pi / 8.0)   # 1.085401
GAUSSIAN_MU = math.sqrt(6.0 / math.pi)          # 1.381977

BoundMode = Literal[
    "coulomb_envelope_lower", "linear_envelope_upper", "sum_approximation", "gaussian_upper"
]


@dataclass(frozen=True)
class TangentCoefficients:
    """Affine tangent alpha*h + beta to the shape f at contact radius t."""

    t: float
    alpha: float
    beta: float


def tangent_coefficients(f: RadialPotential, h: RadialPotential, t: float) -> TangentCoefficients:
    """Match value and slope of alpha*h + beta to f at r = t."""
    if t <= 0.0:
        raise ValueError("contact point t must be positive")
    hp = h.derivative(t)
    if hp == 0.0:
        raise ValueError(f"degenerate envelope basis: h'({t}) = 0")
    alpha = f.derivative(t) / hp
    beta = f(t) - alpha * h(t)
    return TangentCoefficients(t=t, alpha=alpha, beta=beta)


def tangential_spectral_function(
    H_base: Callable[[float], float], tc: TangentCoefficients, v: float
) -> float:
    """Spectral function of the tangential potential: H(v*alpha) + v*beta."""
    w = v * tc.alpha
    if w <= 0.0:
        raise ValueError(f"nonpositive effective coupling v*alpha = {w}")
    return H_base(w) + v * tc.beta


@lru_cache(maxsize=None)
def _base_power_energy(q: float, n: int, ell: int) -> float:
    """Ground data for pure-power envelope bases; exact where known."""
    if q == -1.0:
        return -1.0 / (2.0 * (n + ell)) ** 2
    if q == 2.0:
        return 4.0 * n + 2.0 * ell - 1.0
    res = solve_radial(RadialPotential.pure_power(q), QuantumNumbers(n, ell), EigenSolveConfig())
    return res.energy


def envelope_bound(
    f: RadialPotential,
    basis_q: float,
    qn: QuantumNumbers,
    v: float,
    direction: Literal["upper", "lower"],
    t_range: tuple[float, float] = (1e-3, 1e3),
) -> float:
    """Extremal tangential spectral function over the contact point.

    The caller asserts the convexity direction: for f = -a/r + b*r a
    Coulomb basis (q = -1) gives a lower bound, a linear basis (q = 1) an
    upper bound.  Equals the kinetic-potential substitution value, i.e.
    the (nu, mu) = (P, P) minimization with P of the basis power.
    """
    if v <= 0.0:
        raise ValueError("coupling v must be positive")
    basis = RadialPotential.pure_power(basis_q)
    e_base = _base_power_energy(basis_q, qn.n, qn.ell)

    def h_base(w: float) -> float:
        return scale_power_eigenvalue(1.0, w, basis_q, e_base)

    sign = -1.0 if direction == "lower" else 1.0

    def objective(t: float) -> float:
        tc = tangent_coefficients(f, basis, t)
        return sign * tangential_spectral_function(h_base, tc, v)

    _, val = minimize_positive(objective, t_range[0], t_range[1])
    return sign * val


@dataclass(frozen=True)
class BoundSpec:
    """A (nu, mu) assignment for the Coulomb-plus-linear minimization."""

    mode: BoundMode
    nu: float
    mu: float
    qn: QuantumNumbers

    def __post_init__(self):
        if self.nu <= 0.0 or self.mu <= 0.0:
            raise ValueError("nu and mu must be positive")


def bound_spec(
    mode: BoundMode, qn: QuantumNumbers, cfg: EigenSolveConfig | None = None
) -> BoundSpec:
    """Resolve the (nu, mu) pair for a bound mode.

    lower: nu = mu = n+l;  upper: nu = mu = P(1);  sum approximation:
    nu = n+l, mu = P(1) (a lower bound when n = 1); gaussian: the
    scale-optimized Gaussian constants, ground state only.
    """
    n_plus_l = float(qn.n + qn.ell)
    if mode == "coulomb_envelope_lower":
        return BoundSpec(mode, n_plus_l, n_plus_l, qn)
    if mode == "gaussian_upper":
        if (qn.n, qn.ell) != (1, 0):
            raise ValueError("the Gaussian bound applies to the (1,0) ground state only")
        return BoundSpec(mode, GAUSSIAN_NU, GAUSSIAN_MU, qn)
    p1 = p_from_energy(1.0, _base_power_energy(1.0, qn.n, qn.ell)).value
    if mode == "linear_envelope_upper":
        return BoundSpec(mode, p1, p1, qn)
    if mode == "sum_approximation":
        return BoundSpec(mode, n_plus_l, p1, qn)
    raise ValueError(f"unknown bound mode {mode!r}")


def coulomb_linear_energy(a: float, b: float, spec: BoundSpec) -> float:
    """min over r of 1/r^2 - a/(nu*r) + b*mu*r for the spec's (nu, mu).

    Closed forms at the pure-Coulomb (b = 0) and pure-linear (a = 0)
    edges; otherwise the strictly increasing derivative is root-found.
    """
    if a < 0.0 or b < 0.0:
        raise ValueError("coefficients a, b must be nonnegative")
    if a == 0.0 and b == 0.0:
        raise ValueError("a and b cannot both vanish")
    nu, mu = spec.nu, spec.mu
    if b == 0.0:
        return -a * a / (4.0 * nu * nu)
    if a == 0.0:
        return 3.0 * (b * mu / 2.0) ** (2.0 / 3.0)

    def obj(r: float) -> float:
        return 1.0 / (r * r) - a / (nu * r) + b * mu * r

    def dobj(r: float) -> float:
        return -2.0 / r**3 + a / (nu * r * r) + b * mu

    _, val = minimize_by_derivative(dobj, obj)
    return val


def power_sum_energy(terms: list[tuple[float, float]], p_assign: dict[float, PNumber | float]) -> float:
    """min over r of 1/r^2 + sum a(q) sgn(q) (P(q) r)^q for a(q) > 0.

    Exact for a single term; a lower bound at the bottom of each angular
    momentum subspace (n = 1), and a good approximation otherwise.
    """
    if not terms:
        raise ValueError("term list is empty")
    prepared = []
    for a_q, q in terms:
        if a_q <= 0.0:
            raise ValueError(f"weights must be positive, got a({q}) = {a_q}")
        if q == 0.0:
            raise ValueError("q = 0 is not a power term")
        if q not in p_assign:
            raise ValueError(f"no P assigned for q = {q}")
        sign = 1.0 if q > 0 else -1.0
        prepared.append((a_q * sign * _pval(p_assign[q]) ** q, q))

    def obj(r: float) -> float:
        val = 1.0 / (r * r)
        for coeff, q in prepared:
            val += coeff * r**q
        return val

    def dobj(r: float) -> float:
        val = -2.0 / r**3
        for coeff, q in prepared:
            val += coeff * q * r ** (q - 1.0)
        return val

    _, val = minimize_by_derivative(dobj, obj)
    return val


def omega_split_lower_bound(
    F1: Callable[[float], float],
    F2: Callable[[float], float],
    a: float,
    b: float,
    full_output: bool = False,
):
    """Best lower bound max over omega in (0,1) of

        omega*F1(a/omega) + (1-omega)*F2(b/(1-omega))

    for ground-state spectral functions of the two component shapes.  The
    optimized value equals the kinetic-potential sum rule applied through
    the common minimization over the kinetic variable.  A vanishing
    coefficient collapses to the single-term spectral value (boundary).
    """
    if a <= 0.0 and b <= 0.0:
        raise ValueError("at least one coefficient must be positive")
    if b == 0.0:
        return (F1(a), 1.0, True) if full_output else F1(a)
    if a == 0.0:
        return (F2(b), 0.0, True) if full_output else F2(b)

    def g(w: float) -> float:
        return w * F1(a / w) + (1.0 - w) * F2(b / (1.0 - w))

    w_star, val, at_boundary = maximize_on_unit_interval(g)
    if full_output:
        return val, w_star, at_boundary
    return val


def scale_coulomb_linear(omega: float, a: float, b: float) -> tuple[float, float]:
    """Map -omega*Delta - a/r + b*r onto the unit problem:
    every eigenvalue is (a^2/omega) times the one of -Delta - 1/r + lam*r
    with lam = b*omega^2/a^3."""
    if omega <= 0.0 or a <= 0.0:
        raise ValueError("omega and a must be positive")
    if b < 0.0:
        raise ValueError("b must be nonnegative")
    return a * a / omega, b * omega * omega / a**3


def lambda_from_energy(energy: float, nu: float, mu: float) -> float:
    """Closed-form inverse of the Coulomb-plus-linear minimization at
    a = 1, b = lambda:

        lambda = [2(nu E)^3 - nu E^2 (S - 1)] / [mu (S - 1)^3],
        S = sqrt(1 + 3 nu^2 E)

    defined for E >= -1/(4 nu^2).  Near S = 1 the expression is 0/0 with
    catastrophic cancellation; the exact resummed factorization
    (S+1)^2 (2S-1) / (27 nu^3 mu) is used there.
    """
    if nu <= 0.0 or mu <= 0.0:
        raise ValueError("nu and mu must be positive")
    floor = -1.0 / (4.0 * nu * nu)
    if energy < floor:
        raise ValueError(f"E = {energy} below the Coulomb point {floor}")
    s = math.sqrt(1.0 + 3.0 * nu * nu * energy)
    if abs(s - 1.0) < 1e-3:
        return (s + 1.0) ** 2 * (2.0 * s - 1.0) / (27.0 * nu**3 * mu)
    num = 2.0 * (nu * energy) ** 3 - nu * energy * energy * (s - 1.0)
    return num / (mu * (s - 1.0) ** 3)


def energy_from_lambda(lam: float, spec: BoundSpec) -> float:
    """The forward direction: minimize the (5.5)-form objective at a = 1,
    b = lambda; the stable route, with lambda_from_energy as its check."""
    if lam < 0.0:
        raise ValueError("lambda must be nonnegative")
    return coulomb_linear_energy(1.0, lam, spec)


def gaussian_moment(q: float) -> float:
    """<r^q> for the normalized 3-D Gaussian of unit width parameter:
    (2/sqrt(pi)) Gamma((3+q)/2)."""
    if q <= -3.0:
        raise ValueError("moment diverges for q <= -3")
    return 2.0 / math.sqrt(math.pi) * math.exp(gammaln((3.0 + q) / 2.0))


GAUSSIAN_LOG_MOMENT = 0.5 * float(digamma(1.5))  # <ln r> = ln sigma + this


def gaussian_ground_energy(pot: RadialPotential) -> tuple[float, float]:
    """Scale-optimized Gaussian variational bound on the ground state of
    -Delta + V; returns (energy, width).  Independent of the (nu, mu)
    route: the expectation values are evaluated from Gamma-function
    moments and minimized over the width directly."""

    def energy(sigma: float) -> float:
        val = 1.5 / (sigma * sigma)
        for c, q in pot.power_terms:
            val += c * gaussian_moment(q) * sigma**q
        if pot.log_coefficient != 0.0:
            val += pot.log_coefficient * (math.log(sigma) + GAUSSIAN_LOG_MOMENT)
        return val

    sigma, val = minimize_positive(energy, 1e-6, 1e6)
    return val, sigma

"""The smooth P-representation of power-law and log spectra.

Each eigenvalue E of -Delta + sgn(q)r^q maps to a number P(q) > 0 such
that E is recovered as the minimum over r of P^2/r^2 + V(r).  In this
representation the spectrum is a smooth monotone function of q on [-1, 2],
with the log potential occupying q = 0: the log marker is carried as
q = None, never as q = 0 in the power formulas.

Also provides the kinetic potentials (the Legendre-dual description of the
spectral functions F(v)) and the numerical Legendre transform pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .minimize import minimize_by_derivative, minimize_positive
from .potentials import QuantumNumbers, RadialPotential

SQRT_2E = math.sqrt(2.0 * math.e)


@dataclass(frozen=True)
class PNumber:
    """P value for one state; q is None for the log potential."""

    value: float
    q: float | None = None
    qn: QuantumNumbers | None = None

    def __post_init__(self):
        if self.value <= 0.0:
            raise ValueError(f"P must be positive, got {self.value}")
        if self.q is not None and not (-1.0 <= self.q <= 2.0):
            raise ValueError(f"q={self.q} outside [-1, 2]")

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True)
class KineticPotentialSample:
    """One point (s, f_bar(s)): the minimum mean potential over normalized
    states with mean kinetic energy s."""

    s: float
    f_bar: float

    def __post_init__(self):
        if self.s <= 0.0:
            raise ValueError(f"kinetic energy s must be positive, got {self.s}")


@dataclass(frozen=True)
class SpectralFunctionSample:
    """One point (v, F(v)): the eigenvalue of -Delta + v f as a function of
    the coupling.  F is concave in v; tests check that on triples."""

    v: float
    F: float

    def __post_init__(self):
        if self.v <= 0.0:
            raise ValueError(f"coupling v must be positive, got {self.v}")


def _pval(p) -> float:
    return p.value if isinstance(p, PNumber) else float(p)


def p_from_energy(q: float, energy: float, qn: QuantumNumbers | None = None) -> PNumber:
    """P(q) from the eigenvalue of -Delta + sgn(q)r^q:

        P = |E|^{(2+q)/(2q)} * [2/(2+q)]^{1/q} * |q/(2+q)|^{1/2}

    The bare power eigenvalues share the sign of q, which is required here.
    """
    if q == 0.0:
        raise ValueError("q = 0 has no power form; use p_log_from_energy")
    if energy * q <= 0.0:
        raise ValueError(f"eigenvalue sign must match sgn(q): E={energy}, q={q}")
    value = (
        abs(energy) ** ((2.0 + q) / (2.0 * q))
        * (2.0 / (2.0 + q)) ** (1.0 / q)
        * abs(q / (2.0 + q)) ** 0.5
    )
    return PNumber(value, q, qn)


def energy_from_p(q: float, p) -> float:
    """Closed-form minimum of P^2/r^2 + sgn(q)r^q; exact inverse of
    p_from_energy:  sgn(q)(q/2 + 1)(2P^2/|q|)^{q/(q+2)}."""
    if q == 0.0:
        raise ValueError("q = 0 has no power form; use energy_from_p_log")
    value = _pval(p)
    sign = 1.0 if q > 0 else -1.0
    return sign * (q / 2.0 + 1.0) * (2.0 * value * value / abs(q)) ** (q / (q + 2.0))


def p_log_from_energy(energy: float, qn: QuantumNumbers | None = None) -> PNumber:
    """P for the log potential: E = ln(sqrt(2e) P) inverted."""
    return PNumber(math.exp(energy) / SQRT_2E, None, qn)


def energy_from_p_log(p) -> float:
    """E = ln(sqrt(2e) P) for the log potential."""
    return math.log(SQRT_2E * _pval(p))


def semiclassical_energy(p, pot: RadialPotential) -> tuple[float, float]:
    """min over r > 0 of P^2/r^2 + V(r); returns (energy, argmin radius).

    The minimum is unique because r^3 V'(r) is monotone for every
    supported potential; the stationarity equation is solved by bracketed
    root finding on the analytic derivative.
    """
    value = _pval(p)
    p2 = value * value

    def obj(r: float) -> float:
        return p2 / (r * r) + pot(r)

    def dobj(r: float) -> float:
        return -2.0 * p2 / r**3 + pot.derivative(r)

    r_star, e_min = minimize_by_derivative(dobj, obj)
    return e_min, r_star


def kinetic_potential_power(q: float, p, s: float) -> float:
    """Minimum mean potential at fixed mean kinetic energy s for a pure
    power shape: sgn(q) (P/sqrt(s))^q."""
    if q == 0.0:
        raise ValueError("q = 0 has no power form; use kinetic_potential_log")
    if s <= 0.0:
        raise ValueError("kinetic energy s must be positive")
    sign = 1.0 if q > 0 else -1.0
    return sign * (_pval(p) / math.sqrt(s)) ** q


def kinetic_potential_log(p, s: float) -> float:
    """Log-shape variant: ln(P/sqrt(s))."""
    if s <= 0.0:
        raise ValueError("kinetic energy s must be positive")
    return math.log(_pval(p) / math.sqrt(s))


def spectral_from_kinetic(f_bar: Callable[[float], float], v: float) -> float:
    """F(v) = min over s > 0 of s + v*f_bar(s), for convex decreasing
    kinetic potentials."""
    if v <= 0.0:
        raise ValueError("coupling v must be positive")
    _, val = minimize_positive(lambda s: s + v * f_bar(s), 1e-10, 1e12)
    return val


def legendre_pair(F: Callable[[float], float], v: float, h_rel: float = 1e-5) -> tuple[float, float]:
    """(s, f_bar(s)) from a spectral function F at coupling v:

        f_bar = F'(v),   s = F(v) - v F'(v)

    F' is taken by central differences with step h_rel*v; the reverse map
    1/v = -f_bar'(s) recovers v (checked in tests, not here).
    """
    if v <= 0.0:
        raise ValueError("coupling v must be positive")
    h = h_rel * v
    if v - h <= 0.0 or h == 0.0:
        raise ValueError("derivative step underflow")
    fp = (F(v + h) - F(v - h)) / (2.0 * h)
    s = F(v) - v * fp
    return s, fp


def k_function(q: float | None, p, r: float) -> float:
    """(P/r)^2 - the same form for every q, log included."""
    if r <= 0.0:
        raise ValueError("r must be positive")
    value = _pval(p)
    return (value / r) ** 2

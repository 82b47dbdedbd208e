"""Discrete eigenvalues of -Delta + V(r) for central potentials.

The n-th eigenvalue in the angular momentum subspace l is located by
double-sided shooting: an outward pass from a small-r series start and an
inward pass from the adaptively chosen truncation radius, matched near the
outer classical turning point.  Node counting brackets the target state,
then Brent root finding on the scaled Wronskian mismatch polishes it.

Energies of the scaled operators -omega*Delta + v*V are obtained
analytically from the base problem via `scale_power_eigenvalue` and
`scale_log_eigenvalue`; the solver itself always works with -Delta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from . import _shoot
from .minimize import MinimizationError, minimize_positive
from .potentials import PotentialError, QuantumNumbers, RadialPotential

TAIL_EFOLDS = 25.0   # WKB decay integral required beyond the turning point
COUNT_EFOLDS = 5.0   # node-verification cutoff past the turning point; a
                     # converged energy sits within ~tolerance of the true
                     # one, whose adverse-sign tail zero lies beyond
                     # 0.5*ln(1/tolerance) ~ 10 e-folds


class EigensolverError(RuntimeError):
    """Shooting failed to bracket or converge on the requested state."""

    def __init__(self, message, bracket=None):
        super().__init__(message)
        self.bracket = bracket


@dataclass(frozen=True)
class EigenSolveConfig:
    r_min: float = 1e-6
    r_max: float = 1e6          # cap on the adaptive truncation radius
    grid_points: int = 120_000  # integrator step budget per pass
    energy_tolerance: float = 1e-9
    max_bracket_expansions: int = 60

    def __post_init__(self):
        if not (0.0 < self.r_min < self.r_max):
            raise ValueError("need 0 < r_min < r_max")
        if self.grid_points < 1000:
            raise ValueError("grid_points must be >= 1000")
        if self.energy_tolerance <= 0.0:
            raise ValueError("energy_tolerance must be positive")


@dataclass(frozen=True)
class EigenResult:
    energy: float
    nodes: int
    residual: float
    converged: bool
    iterations: int = 0
    bracket: tuple[float, float] = (math.nan, math.nan)
    r_match: float = math.nan
    r_max_used: float = math.nan


def _pot_arrays(pot: RadialPotential):
    if pot.power_terms:
        coeffs = np.array([c for c, _ in pot.power_terms], dtype=np.float64)
        qs = np.array([q for _, q in pot.power_terms], dtype=np.float64)
    else:
        coeffs = np.zeros(0, dtype=np.float64)
        qs = np.zeros(0, dtype=np.float64)
    return coeffs, qs, float(pot.log_coefficient)


def _v_eff(pot: RadialPotential, ell: int, r: float) -> float:
    return pot(r) + ell * (ell + 1) / (r * r)


def estimate_energy(pot: RadialPotential, qn: QuantumNumbers) -> float:
    """Semiclassical starting guess from the power-sum recipe.

    P values at the term exponents are approximated linearly in q between
    the exact endpoint values n+l and 2n+l-1/2; accurate to a few percent,
    which is all the bracketing stage needs.
    """
    n, ell = qn.n, qn.ell
    p_lo = float(n + ell)
    p_hi = 2.0 * n + ell - 0.5

    def p_est(q: float) -> float:
        return p_lo + (q + 1.0) / 3.0 * (p_hi - p_lo)

    def objective(r: float) -> float:
        val = 1.0 / (r * r)
        for c, q in pot.power_terms:
            val += c * p_est(q) ** q * r ** q
        if pot.log_coefficient != 0.0:
            val += pot.log_coefficient * math.log(p_est(0.0) * r)
        return val

    try:
        _, val = minimize_positive(objective, 1e-6, 1e8, xtol_rel=1e-6)
        return val
    except MinimizationError:
        # fall back on the potential value at a unit-scale radius
        return _v_eff(pot, ell, 1.0)


def _geometry(pot: RadialPotential, ell: int, energy: float, cfg: EigenSolveConfig):
    """(r_match, r_count, r_max, has_allowed) for one energy: the outer
    turning point, the node-counting cutoff a few WKB e-folds past it, the
    truncation radius TAIL_EFOLDS past it, and whether a classically
    allowed region exists at all at this energy."""
    lo = cfg.r_min
    hi = cfg.r_max
    grid = np.geomspace(lo, hi, 600)
    veff = np.zeros_like(grid)
    for c, q in pot.power_terms:
        veff += c * grid ** q
    if pot.log_coefficient != 0.0:
        veff += pot.log_coefficient * np.log(grid)
    if ell > 0:
        veff += ell * (ell + 1) / (grid * grid)
    allowed = veff < energy
    has_allowed = bool(np.any(allowed))
    if not has_allowed:
        # energy below the potential floor: no oscillation anywhere
        k = int(np.argmin(veff))
        r_turn = grid[k]
    else:
        last = int(np.nonzero(allowed)[0][-1])
        if last == len(grid) - 1:
            r_turn = grid[-1]  # turning point beyond the cap; clamp
        else:
            a, b = grid[last], grid[last + 1]
            for _ in range(40):
                m = 0.5 * (a + b)
                if _v_eff(pot, ell, m) < energy:
                    a = m
                else:
                    b = m
            r_turn = 0.5 * (a + b)
    # accumulate the decay integral past the turning point
    s = 0.0
    r = r_turn
    kappa_prev = 0.0
    step = max(r_turn * 0.02, 10.0 * cfg.r_min)
    r_max = r_turn
    r_count = r_turn
    while s < TAIL_EFOLDS and r < cfg.r_max:
        r_next = r + step
        v = _v_eff(pot, ell, r_next)
        kappa = math.sqrt(max(v - energy, 0.0))
        s += 0.5 * (kappa + kappa_prev) * (r_next - r)
        if s < COUNT_EFOLDS:
            r_count = r_next
        kappa_prev = kappa
        r = r_next
        r_max = r_next
        step *= 1.1
    r_match = min(max(r_turn, 4.0 * cfg.r_min), 0.9 * r_max)
    return r_match, min(r_count, cfg.r_max), min(r_max, cfg.r_max), has_allowed


def _series_start(coeffs, qs, ell, r0):
    """u ~ r^{l+1}(1 + a1 r) normalized to u(r0) = 1; a1 captures any
    Coulomb singularity in the potential."""
    c_coul = 0.0
    for i in range(len(coeffs)):
        if qs[i] == -1.0:
            c_coul += coeffs[i]
    a1 = c_coul / (2.0 * (ell + 1))
    u0 = 1.0 + a1 * r0
    up0 = ((ell + 1) * (1.0 + a1 * r0) / r0) + a1
    return u0, up0


def _integrator_rtol(cfg: EigenSolveConfig) -> float:
    return max(1e-13, min(1e-10, 0.01 * cfg.energy_tolerance))


def _count_pass(coeffs, qs, clog, ell, energy, r_count, r_max, cfg, max_nodes) -> int:
    """Sturm node count of the regular solution on [r_min, r_max]; zeros
    beyond r_count (deep in the forbidden tail) are ignored, and the pass
    aborts once the count exceeds max_nodes (the caller only needs to
    compare against a target)."""
    lam = float(ell * (ell + 1))
    r0 = cfg.r_min
    u0, up0 = _series_start(coeffs, qs, ell, r0)
    _, _, nodes, _, status = _shoot.shoot_pass(
        coeffs, qs, clog, lam, energy, r0, r_max, u0, up0,
        _integrator_rtol(cfg), cfg.grid_points, r_count, max_nodes,
    )
    if status != _shoot.STATUS_OK:
        raise EigensolverError(f"counting pass failed with status {status} at E={energy}")
    return nodes


def _match_pass(coeffs, qs, clog, ell, energy, r_match, r_max, cfg) -> float:
    """Scaled Wronskian mismatch of the outward and inward solutions at
    r_match; zero exactly at the eigenvalues of the truncated problem."""
    lam = float(ell * (ell + 1))
    r0 = cfg.r_min
    u0, up0 = _series_start(coeffs, qs, ell, r0)
    rtol = _integrator_rtol(cfg)
    u_o, up_o, _, _, status_o = _shoot.shoot_pass(
        coeffs, qs, clog, lam, energy, r0, r_match, u0, up0, rtol, cfg.grid_points, math.inf,
        1 << 30,
    )
    if status_o != _shoot.STATUS_OK:
        raise EigensolverError(f"outward integration failed with status {status_o} at E={energy}")
    # WKB start for the decaying tail
    g_end = _shoot._gfun(r_max, coeffs, qs, clog, lam, energy)
    kappa = math.sqrt(max(g_end, 1e-12))
    u_i, up_i, _, _, status_i = _shoot.shoot_pass(
        coeffs, qs, clog, lam, energy, r_max, r_match, 1.0, -kappa, rtol, cfg.grid_points, math.inf,
        1 << 30,
    )
    if status_i != _shoot.STATUS_OK:
        raise EigensolverError(f"inward integration failed with status {status_i} at E={energy}")
    g_m = _shoot._gfun(r_match, coeffs, qs, clog, lam, energy)
    kbar = math.sqrt(abs(g_m)) + 1e-8
    norm_o = math.hypot(u_o, up_o / kbar)
    norm_i = math.hypot(u_i, up_i / kbar)
    return (up_o * u_i - up_i * u_o) / (kbar * norm_o * norm_i)


def solve_radial(
    pot: RadialPotential,
    qn: QuantumNumbers,
    cfg: EigenSolveConfig | None = None,
) -> EigenResult:
    """n-th eigenvalue of -Delta + V(r) in the l subspace, with n-1 nodes."""
    cfg = cfg or EigenSolveConfig()
    coeffs, qs, clog = _pot_arrays(pot)
    n, ell = qn.n, qn.ell
    target = n - 1
    evals = 0
    # potentials without a confining term have their discrete spectrum
    # strictly below the continuum threshold V(inf) = 0
    confining = pot.log_coefficient != 0.0 or any(q > 0.0 for _, q in pot.power_terms)
    threshold = math.inf if confining else 0.0

    def count_nodes(energy: float) -> int:
        # full-domain Sturm count: its n-1 -> n transition pins the n-th
        # eigenvalue of the truncated problem to within the decay margin
        nonlocal evals
        if energy >= threshold:
            return n + 10_000  # continuum: counts as "above every bound state"
        evals += 1
        _, _, r_max, has_allowed = _geometry(pot, ell, energy, cfg)
        if not has_allowed:
            return 0  # below the potential floor: nothing oscillates
        return _count_pass(coeffs, qs, clog, ell, energy, r_max, r_max, cfg, target + 1)

    e0 = estimate_energy(pot, qn)
    step = 0.3 * abs(e0) + 0.1
    e_lo = e0 - step
    e_hi = e0 + step
    c_lo = count_nodes(e_lo)
    expansions = 0
    while c_lo > target:
        e_lo -= step
        step *= 2.0
        expansions += 1
        if expansions > cfg.max_bracket_expansions:
            raise EigensolverError(
                "insufficient bound states or bad truncation (lower bracket not found)",
                bracket=(e_lo, e_hi),
            )
        c_lo = count_nodes(e_lo)
    step = 0.3 * abs(e0) + 0.1
    c_hi = count_nodes(e_hi)
    expansions = 0
    while c_hi <= target:
        e_hi += step
        step *= 2.0
        expansions += 1
        if expansions > cfg.max_bracket_expansions:
            raise EigensolverError(
                "insufficient bound states or bad truncation (upper bracket not found)",
                bracket=(e_lo, e_hi),
            )
        c_hi = count_nodes(e_hi)
    # bisect on the node count until the bracket holds exactly one state
    while not (c_lo == target and c_hi == target + 1):
        mid = 0.5 * (e_lo + e_hi)
        c = count_nodes(mid)
        if c <= target:
            e_lo, c_lo = mid, c
        else:
            e_hi, c_hi = mid, c
        if abs(e_hi - e_lo) < 1e-14 * max(abs(e_lo), abs(e_hi), 1e-10):
            raise EigensolverError(
                f"insufficient bound states or bad truncation (node bisection "
                f"collapsed without isolating the state n={n}, l={ell})",
                bracket=(e_lo, e_hi),
            )

    # freeze the geometry at the bracket top so the mismatch is smooth in E
    r_match, _, r_max, _ = _geometry(pot, ell, e_hi, cfg)

    history: list[tuple[float, float]] = []

    def mismatch(energy: float) -> float:
        nonlocal evals
        evals += 1
        w = _match_pass(coeffs, qs, clog, ell, energy, r_match, r_max, cfg)
        history.append((energy, w))
        return w

    w_lo = mismatch(e_lo)
    w_hi = mismatch(e_hi)
    if w_lo == 0.0:
        root = e_lo
    elif w_hi == 0.0:
        root = e_hi
    elif w_lo * w_hi > 0.0:
        raise EigensolverError(
            f"matching function does not change sign on the node bracket "
            f"({e_lo}, {e_hi}); truncation radius may be inadequate",
            bracket=(e_lo, e_hi),
        )
    else:
        root = brentq(
            mismatch,
            e_lo,
            e_hi,
            xtol=1e-30,
            rtol=max(cfg.energy_tolerance, 4.0e-16),
            maxiter=200,
        )

    # tightest sign-change bracket seen, for an honest residual
    lo_side = max((e for e, w in history if e <= root and w * w_lo >= 0.0), default=e_lo)
    hi_side = min((e for e, w in history if e >= root and w * w_hi >= 0.0), default=e_hi)
    width = abs(hi_side - lo_side)
    residual = width / max(abs(root), 1e-300)

    # verification count stops shortly past the turning point: at the
    # converged energy the far tail can show a fake crossing where the
    # residual growing-solution admixture takes over
    _, r_count, r_vmax, _ = _geometry(pot, ell, root, cfg)
    nodes_at_root = _count_pass(coeffs, qs, clog, ell, root, r_count, r_vmax, cfg, target + 1)
    converged = nodes_at_root == target and residual <= cfg.energy_tolerance
    if nodes_at_root != target:
        raise EigensolverError(
            f"converged to a state with {nodes_at_root} nodes, expected {target}",
            bracket=(lo_side, hi_side),
        )
    return EigenResult(
        energy=float(root),
        nodes=nodes_at_root,
        residual=float(residual),
        converged=bool(converged),
        iterations=evals,
        bracket=(float(lo_side), float(hi_side)),
        r_match=float(r_match),
        r_max_used=float(r_max),
    )


def scale_power_eigenvalue(omega: float, v: float, q: float, energy_base: float) -> float:
    """Eigenvalue of -omega*Delta + v*sgn(q)r^q from the base eigenvalue of
    -Delta + sgn(q)r^q:  omega * (v/omega)^{2/(2+q)} * E_base."""
    if omega <= 0.0 or v <= 0.0:
        raise ValueError("omega and v must be positive")
    if q <= -2.0:
        raise PotentialError(f"power q={q} outside the scaling family (q > -2)")
    return omega * (v / omega) ** (2.0 / (2.0 + q)) * energy_base


def scale_log_eigenvalue(omega: float, v: float, energy_log: float) -> float:
    """Eigenvalue of -omega*Delta + v*ln(r) from the base eigenvalue of
    -Delta + ln(r):  v*E_L - (v/2) ln(v/omega)."""
    if omega <= 0.0 or v <= 0.0:
        raise ValueError("omega and v must be positive")
    return v * energy_log - 0.5 * v * math.log(v / omega)

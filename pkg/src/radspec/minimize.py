"""One-dimensional minimization on (0, inf) for unimodal objectives.

All spectral objectives in this package are strictly unimodal on r > 0
(guaranteed by the monotonicity of r^3 V'(r) for the supported potentials),
so a bracket plus Brent refinement (golden section with parabolic steps)
is sufficient; no multi-start is performed.
"""

from __future__ import annotations

import math
from typing import Callable

import numpy as np
from scipy.optimize import brentq, minimize_scalar


class MinimizationError(RuntimeError):
    """Bracketing or refinement of a 1-D extremum failed."""


def bracket_minimum(
    f: Callable[[float], float],
    lo: float = 1e-8,
    hi: float = 1e8,
    samples_per_decade: int = 8,
) -> tuple[float, float, float]:
    """Find (a, m, b) on a log grid with f(m) < f(a), f(m) < f(b)."""
    n = max(3, int(samples_per_decade * math.log10(hi / lo)))
    xs = np.geomspace(lo, hi, n)
    vals = np.array([f(x) for x in xs])
    if not np.all(np.isfinite(vals)):
        finite = np.isfinite(vals)
        xs, vals = xs[finite], vals[finite]
        if len(xs) < 3:
            raise MinimizationError("objective not finite on the search range")
    k = int(np.argmin(vals))
    spread = float(np.max(vals) - np.min(vals))
    if spread <= 1e-13 * max(1.0, float(np.max(np.abs(vals)))):
        m = len(xs) // 2
        return xs[m - 1], xs[m], xs[m + 1]  # flat objective: any point is the minimum
    if k == 0 or k == len(xs) - 1:
        raise MinimizationError(
            f"minimum sits at the edge of the bracket range [{lo:g}, {hi:g}]"
        )
    return xs[max(k - 2, 0)], xs[k], xs[min(k + 2, len(xs) - 1)]


def minimize_positive(
    f: Callable[[float], float],
    lo: float = 1e-8,
    hi: float = 1e8,
    xtol_rel: float = 1e-12,
) -> tuple[float, float]:
    """Minimize a unimodal f over (lo, hi); returns (argmin, min value).

    Works in log(x) so the relative tolerance is uniform across scales.
    """
    a, _, b = bracket_minimum(f, lo, hi)

    def g(t: float) -> float:
        return f(math.exp(t))

    # bounded variant: golden section with parabolic steps, tolerant of
    # value ties at the bracket points
    res = minimize_scalar(
        g,
        bounds=(math.log(a), math.log(b)),
        method="bounded",
        options={"xatol": xtol_rel, "maxiter": 500},
    )
    if not res.success:
        raise MinimizationError(f"bounded Brent refinement failed: {res.message}")
    x = math.exp(res.x)
    return x, f(x)


def minimize_by_derivative(
    df: Callable[[float], float],
    f: Callable[[float], float],
    lo: float = 1e-10,
    hi: float = 1e10,
) -> tuple[float, float]:
    """Minimize f with strictly increasing derivative df on (0, inf).

    Locates the sign change of df on a log grid and polishes it with Brent
    root finding; more accurate than value-based search when df is exact.
    """
    a, b = _bracket_root_increasing(df, lo, hi)
    r = brentq(df, a, b, xtol=1e-300, rtol=8.9e-16, maxiter=200)
    return r, f(r)


def _bracket_root_increasing(df, lo, hi):
    x = 1.0
    fa = df(x)
    if fa < 0.0:
        a = x
        b = x * 2.0
        while df(b) < 0.0:
            a = b
            b *= 4.0
            if b > hi:
                raise MinimizationError("no stationary point below the upper range")
        return a, b
    b = x
    a = x * 0.5
    while df(a) > 0.0:
        b = a
        a *= 0.25
        if a < lo:
            raise MinimizationError("no stationary point above the lower range")
    return a, b


def maximize_on_unit_interval(
    f: Callable[[float], float],
    edge: float = 1e-9,
    xtol: float = 1e-12,
) -> tuple[float, float, bool]:
    """Maximize a concave f on (0, 1); returns (argmax, max, at_boundary)."""
    xs = np.linspace(edge, 1.0 - edge, 41)
    vals = np.array([f(x) for x in xs])
    k = int(np.argmax(vals))
    if k == 0 or k == len(xs) - 1:
        # concavity means an edge maximum really is the supremum side
        res = minimize_scalar(
            lambda x: -f(x),
            bounds=(edge, 1.0 - edge) if k == 0 else (xs[-2], 1.0 - edge),
            method="bounded",
            options={"xatol": xtol},
        )
        x = float(res.x)
        boundary = x < 10 * edge or x > 1.0 - 10 * edge
        return x, f(x), boundary
    res = minimize_scalar(
        lambda x: -f(x),
        bounds=(xs[k - 1], xs[k + 1]),
        method="bounded",
        options={"xatol": xtol},
    )
    x = float(res.x)
    return x, f(x), False

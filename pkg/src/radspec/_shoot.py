"""Adaptive Runge-Kutta shooting passes for the reduced radial equation.

Integrates u''(r) = [l(l+1)/r^2 + V(r) - E] u(r) with a Dormand-Prince 5(4)
embedded pair and a PI-free step controller.  Error is measured relative to
the running amplitude of (u, u') so that node crossings do not stall the
step size and exponential growth over many decades stays well conditioned.

The potential arrives as flat arrays (coefficients, exponents, log
coefficient) so the whole pass compiles with numba.
"""

from __future__ import annotations

import numpy as np
from numba import njit

STATUS_OK = 0
STATUS_MAX_STEPS = 1
STATUS_STEP_UNDERFLOW = 2
STATUS_NOT_FINITE = 3

# Dormand-Prince 5(4) tableau
_C2, _C3, _C4, _C5 = 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0
_A21 = 1.0 / 5.0
_A31, _A32 = 3.0 / 40.0, 9.0 / 40.0
_A41, _A42, _A43 = 44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0
_A51, _A52, _A53, _A54 = 19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0
_A61, _A62, _A63, _A64, _A65 = (
    9017.0 / 3168.0,
    -355.0 / 33.0,
    46732.0 / 5247.0,
    49.0 / 176.0,
    -5103.0 / 18656.0,
)
_B1, _B3, _B4, _B5, _B6 = 35.0 / 384.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0
_E1, _E3, _E4, _E5, _E6, _E7 = (
    71.0 / 57600.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
)

_RESCALE_LIMIT = 1e150


@njit(cache=True)
def _gfun(r, coeffs, qs, clog, lam, energy):
    """u''/u coefficient: l(l+1)/r^2 + V(r) - E."""
    g = lam / (r * r) - energy
    for i in range(coeffs.shape[0]):
        g += coeffs[i] * r ** qs[i]
    if clog != 0.0:
        g += clog * np.log(r)
    return g


@njit(cache=True)
def shoot_pass(coeffs, qs, clog, lam, energy, r0, r1, u0, up0, rtol, max_steps, count_until, max_nodes):
    """Integrate from r0 to r1 (either direction); returns
    (u, up, nodes, steps, status).

    Sign changes are only counted while the integration has not passed
    `count_until` (in the travel direction); zeros beyond that radius are
    tail artifacts of the unstable growing solution, not wavefunction nodes.
    A pass used purely for counting may abort once `max_nodes` is exceeded:
    for flat confining potentials an energy overshoot pushes the turning
    point out exponentially, and the count decision never needs more nodes
    than the target plus one.
    """
    direction = 1.0 if r1 > r0 else -1.0
    span = abs(r1 - r0)
    r = r0
    u = u0
    up = up0
    nodes = 0
    # running amplitude scales for the error norm
    au = abs(u) + 1e-300
    aup = abs(up) + 1e-300
    h = direction * min(span * 1e-6 + 1e-300, 0.1 * abs(r0) + 1e-12)
    if h == 0.0:
        h = direction * 1e-12
    k1u = up
    k1p = _gfun(r, coeffs, qs, clog, lam, energy) * u
    steps = 0
    n_reject = 0
    while (r1 - r) * direction > 0.0:
        if steps >= max_steps:
            return u, up, nodes, steps, STATUS_MAX_STEPS
        if abs(h) < 1e-15 * max(abs(r), 1e-10):
            return u, up, nodes, steps, STATUS_STEP_UNDERFLOW
        if (r + h - r1) * direction > 0.0:
            h = r1 - r
        # stages
        y2u = u + h * _A21 * k1u
        y2p = up + h * _A21 * k1p
        rr = r + _C2 * h
        k2u = y2p
        k2p = _gfun(rr, coeffs, qs, clog, lam, energy) * y2u

        y3u = u + h * (_A31 * k1u + _A32 * k2u)
        y3p = up + h * (_A31 * k1p + _A32 * k2p)
        rr = r + _C3 * h
        k3u = y3p
        k3p = _gfun(rr, coeffs, qs, clog, lam, energy) * y3u

        y4u = u + h * (_A41 * k1u + _A42 * k2u + _A43 * k3u)
        y4p = up + h * (_A41 * k1p + _A42 * k2p + _A43 * k3p)
        rr = r + _C4 * h
        k4u = y4p
        k4p = _gfun(rr, coeffs, qs, clog, lam, energy) * y4u

        y5u = u + h * (_A51 * k1u + _A52 * k2u + _A53 * k3u + _A54 * k4u)
        y5p = up + h * (_A51 * k1p + _A52 * k2p + _A53 * k3p + _A54 * k4p)
        rr = r + _C5 * h
        k5u = y5p
        k5p = _gfun(rr, coeffs, qs, clog, lam, energy) * y5u

        y6u = u + h * (_A61 * k1u + _A62 * k2u + _A63 * k3u + _A64 * k4u + _A65 * k5u)
        y6p = up + h * (_A61 * k1p + _A62 * k2p + _A63 * k3p + _A64 * k4p + _A65 * k5p)
        rr = r + h
        k6u = y6p
        k6p = _gfun(rr, coeffs, qs, clog, lam, energy) * y6u

        unew = u + h * (_B1 * k1u + _B3 * k3u + _B4 * k4u + _B5 * k5u + _B6 * k6u)
        pnew = up + h * (_B1 * k1p + _B3 * k3p + _B4 * k4p + _B5 * k5p + _B6 * k6p)
        k7u = pnew
        k7p = _gfun(rr, coeffs, qs, clog, lam, energy) * unew

        eu = h * (_E1 * k1u + _E3 * k3u + _E4 * k4u + _E5 * k5u + _E6 * k6u + _E7 * k7u)
        ep = h * (_E1 * k1p + _E3 * k3p + _E4 * k4p + _E5 * k5p + _E6 * k6p + _E7 * k7p)

        if not (np.isfinite(unew) and np.isfinite(pnew)):
            return u, up, nodes, steps, STATUS_NOT_FINITE

        scu = rtol * max(au, abs(unew))
        scp = rtol * max(aup, abs(pnew))
        err = max(abs(eu) / scu, abs(ep) / scp)

        if err <= 1.0:
            if (unew == 0.0 or u * unew < 0.0) and (rr - count_until) * direction <= 0.0:
                nodes += 1
                if nodes > max_nodes:
                    return unew, pnew, nodes, steps, STATUS_OK
            r = rr
            u = unew
            up = pnew
            k1u = k7u
            k1p = k7p
            if abs(u) > au:
                au = abs(u)
            if abs(up) > aup:
                aup = abs(up)
            if au > _RESCALE_LIMIT or aup > _RESCALE_LIMIT:
                big = max(au, aup)
                u /= big
                up /= big
                k1u /= big
                k1p /= big
                au /= big
                aup /= big
            n_reject = 0
            fac = 0.9 * err ** (-0.2) if err > 0.0 else 5.0
            if fac > 5.0:
                fac = 5.0
            h *= fac
        else:
            n_reject += 1
            fac = 0.9 * err ** (-0.2)
            if fac < 0.2:
                fac = 0.2
            h *= fac
            if n_reject > 200:
                return u, up, nodes, steps, STATUS_STEP_UNDERFLOW
        steps += 1
    return u, up, nodes, steps, STATUS_OK

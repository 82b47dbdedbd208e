"""Cubic interpolation of P(q) across -1 <= q <= 2.

The four anchors are q = -1 and q = 2 (exact closed forms n+l and
2n+l-1/2) plus q = 0 (log potential) and q = 1 (linear potential), both
computed by the eigensolver.  The cubic is expanded about q = 0 to favour
the region between log and linear used by potential models.
"""

from __future__ import annotations

from dataclasses import dataclass

from .pnumbers import (
    energy_from_p,
    energy_from_p_log,
    p_from_energy,
    p_log_from_energy,
)
from .potentials import QuantumNumbers, RadialPotential
from .solver import EigenSolveConfig, EigensolverError, solve_radial


@dataclass(frozen=True)
class AnchorSet:
    """P values at the four interpolation nodes for one state."""

    qn: QuantumNumbers
    p_coulomb: float   # q = -1, exact: n + l
    p_log: float       # q = 0, from the log eigensolve
    p_linear: float    # q = 1, from the linear eigensolve
    p_oscillator: float  # q = 2, exact: 2n + l - 1/2

    def __post_init__(self):
        if self.p_log <= 0.0 or self.p_linear <= 0.0:
            raise ValueError("interior anchors must be positive")


@dataclass(frozen=True)
class PCurve:
    """P(q) = a + b q + c q^2 + d q^3 about q = 0."""

    qn: QuantumNumbers
    a: float
    b: float
    c: float
    d: float

    def __call__(self, q: float) -> float:
        return self.a + q * (self.b + q * (self.c + q * self.d))


def exact_anchor_endpoints(qn: QuantumNumbers) -> tuple[float, float]:
    """The closed-form P values at q = -1 and q = 2."""
    return float(qn.n + qn.ell), 2.0 * qn.n + qn.ell - 0.5


def anchors_for_state(qn: QuantumNumbers, cfg: EigenSolveConfig | None = None) -> AnchorSet:
    """Run the log and linear eigensolves and assemble the anchor set."""
    cfg = cfg or EigenSolveConfig()
    p_m1, p_2 = exact_anchor_endpoints(qn)
    e_log = solve_radial(RadialPotential.log(), qn, cfg).energy
    e_lin = solve_radial(RadialPotential.pure_power(1.0), qn, cfg).energy
    return AnchorSet(
        qn=qn,
        p_coulomb=p_m1,
        p_log=p_log_from_energy(e_log, qn).value,
        p_linear=p_from_energy(1.0, e_lin, qn).value,
        p_oscillator=p_2,
    )


def build_cubic(anchors: AnchorSet) -> PCurve:
    """Invert the four interpolation conditions; the closed-form inverse of
    the Vandermonde system at nodes {-1, 0, 1, 2}."""
    pm1 = anchors.p_coulomb
    p0 = anchors.p_log
    p1 = anchors.p_linear
    p2 = anchors.p_oscillator
    a = p0
    b = -pm1 / 3.0 - p0 / 2.0 + p1 - p2 / 6.0
    c = pm1 / 2.0 - p0 + p1 / 2.0
    d = -pm1 / 6.0 + p0 / 2.0 - p1 / 2.0 + p2 / 6.0
    return PCurve(qn=anchors.qn, a=a, b=b, c=c, d=d)


def interpolated_energy(curve: PCurve, q: float) -> float:
    """Approximate eigenvalue at power q from the cubic P(q); the log case
    sits exactly at q = 0.  Extrapolation outside [-1, 2] is refused."""
    if not (-1.0 <= q <= 2.0):
        raise ValueError(f"q={q} outside the interpolation range [-1, 2]")
    p = curve(q)
    if q == 0.0:
        return energy_from_p_log(p)
    return energy_from_p(q, p)


@dataclass(frozen=True)
class Table1Row:
    n: int
    ell: int
    p_log: float
    p_linear: float
    e_approx_half: float
    e_exact_half: float
    percent_error: float


TABLE1_STATES = tuple(
    QuantumNumbers(n, ell) for ell in range(0, 5) for n in range(1, 6)
)


def table1(cfg: EigenSolveConfig | None = None) -> list[Table1Row]:
    """The 25-state comparison at q = 1/2: interpolated versus direct.

    Each row needs three eigensolves (log, linear, sqrt); rows are
    independent and pure, so callers may fan them out across workers.
    """
    cfg = cfg or EigenSolveConfig()
    sqrt_pot = RadialPotential.pure_power(0.5)
    rows = []
    for qn in TABLE1_STATES:
        try:
            anchors = anchors_for_state(qn, cfg)
            curve = build_cubic(anchors)
            e_approx = interpolated_energy(curve, 0.5)
            e_exact = solve_radial(sqrt_pot, qn, cfg).energy
        except EigensolverError as exc:
            raise EigensolverError(
                f"table row (n={qn.n}, l={qn.ell}) failed: {exc}", bracket=exc.bracket
            ) from exc
        rows.append(
            Table1Row(
                n=qn.n,
                ell=qn.ell,
                p_log=anchors.p_log,
                p_linear=anchors.p_linear,
                e_approx_half=e_approx,
                e_exact_half=e_exact,
                percent_error=100.0 * (e_approx - e_exact) / e_exact,
            )
        )
    return rows


def format_table1(rows: list[Table1Row]) -> str:
    """Aligned text rendering with the table's column set."""
    lines = [f"{'n':>2} {'l':>2} {'P(0)':>10} {'P(1)':>10} {'E_A(1/2)':>10} {'E(1/2)':>10} {'%':>7}"]
    for r in rows:
        lines.append(
            f"{r.n:>2} {r.ell:>2} {r.p_log:>10.5f} {r.p_linear:>10.5f} "
            f"{r.e_approx_half:>10.5f} {r.e_exact_half:>10.5f} {r.percent_error:>7.3f}"
        )
    return "\n".join(lines)

"""Central potentials built from signed power terms and an optional log term.

A potential is V(r) = sum_i c_i r^{q_i} + c_log*ln(r) with every exponent
restricted to -1 <= q <= 2, q != 0 (the log term carries the q = 0 role).
Units are chosen so the kinetic operator is exactly -Delta.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

Q_MIN = -1.0
Q_MAX = 2.0


class PotentialError(ValueError):
    """Invalid potential definition or evaluation outside the domain."""


@dataclass(frozen=True)
class QuantumNumbers:
    """Radial index n >= 1 and angular momentum l >= 0 labelling one state."""

    n: int
    ell: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"radial index n must be >= 1, got {self.n}")
        if self.ell < 0:
            raise ValueError(f"angular momentum l must be >= 0, got {self.ell}")

    @property
    def nodes(self) -> int:
        """Number of interior nodes of the radial wavefunction."""
        return self.n - 1


@dataclass(frozen=True)
class RadialPotential:
    """Linear combination of power terms c*r^q plus an optional c_log*ln(r)."""

    power_terms: tuple[tuple[float, float], ...] = ()
    log_coefficient: float = 0.0

    def __post_init__(self):
        terms = tuple((float(c), float(q)) for c, q in self.power_terms)
        object.__setattr__(self, "power_terms", terms)
        object.__setattr__(self, "log_coefficient", float(self.log_coefficient))
        for c, q in terms:
            if q == 0.0:
                raise PotentialError("q = 0 is not a power term; use the log term")
            if not (Q_MIN <= q <= Q_MAX):
                raise PotentialError(f"exponent q={q} outside supported range [{Q_MIN}, {Q_MAX}]")
        if not terms and self.log_coefficient == 0.0:
            raise PotentialError("potential has no terms")

    @classmethod
    def pure_power(cls, q: float) -> "RadialPotential":
        """sgn(q) * r^q."""
        sign = 1.0 if q > 0 else -1.0
        return cls(power_terms=((sign, float(q)),))

    @classmethod
    def log(cls, coefficient: float = 1.0) -> "RadialPotential":
        """coefficient * ln(r)."""
        return cls(power_terms=(), log_coefficient=coefficient)

    @classmethod
    def coulomb_plus_linear(cls, a: float, b: float) -> "RadialPotential":
        """-a/r + b*r (either coefficient may be zero, not both)."""
        terms = []
        if a != 0.0:
            terms.append((-float(a), -1.0))
        if b != 0.0:
            terms.append((float(b), 1.0))
        return cls(power_terms=tuple(terms))

    @property
    def has_log(self) -> bool:
        return self.log_coefficient != 0.0

    def __call__(self, r: float) -> float:
        return evaluate_potential(self, r)

    def derivative(self, r: float) -> float:
        """dV/dr at r > 0."""
        if r <= 0.0:
            raise PotentialError(f"potential derivative requires r > 0, got r={r}")
        out = 0.0
        for c, q in self.power_terms:
            out += c * q * r ** (q - 1.0)
        if self.log_coefficient != 0.0:
            out += self.log_coefficient / r
        return out

    def scaled(self, factor: float) -> "RadialPotential":
        """factor * V(r), used to divide a Hamiltonian through by omega."""
        return RadialPotential(
            power_terms=tuple((factor * c, q) for c, q in self.power_terms),
            log_coefficient=factor * self.log_coefficient,
        )

    def coulomb_coefficient(self) -> float:
        """Total coefficient of the 1/r singularity (0 if absent)."""
        return sum(c for c, q in self.power_terms if q == -1.0)


def evaluate_potential(pot: RadialPotential, r: float) -> float:
    """V(r) at a single radius r > 0."""
    if r <= 0.0:
        raise PotentialError(f"potential is defined for r > 0, got r={r}")
    out = 0.0
    for c, q in pot.power_terms:
        out += c * r ** q
    if pot.log_coefficient != 0.0:
        out += pot.log_coefficient * math.log(r)
    return out


_TERM_RE = re.compile(r"^(pow:(?P<q>[-+]?\d*\.?\d+(?:[eE][-+]?\d+)?)|log)(\*(?P<coeff>[-+]?\d*\.?\d+(?:[eE][-+]?\d+)?))?$")


def parse_potential(spec: str) -> RadialPotential:
    """Parse a potential spec string.

    Grammar (whitespace insensitive): terms joined by '+', each term either
    ``pow:<q> [* coeff]`` or ``log [* coeff]``.  A bare power term means the
    pure power sgn(q)*r^q; an explicit coefficient means coeff*r^q.

    >>> parse_potential("pow:-1")            # -1/r
    >>> parse_potential("pow:1 * 1 + pow:-1 * -1")   # r - 1/r
    """
    compact = spec.replace(" ", "").replace("\t", "")
    if not compact:
        raise PotentialError("empty potential spec")
    power_terms: list[tuple[float, float]] = []
    log_coefficient = 0.0
    # split on '+' that starts a new term, keeping signs inside coefficients
    parts = _split_terms(compact)
    for part in parts:
        m = _TERM_RE.match(part)
        if m is None:
            raise PotentialError(f"cannot parse potential term {part!r}")
        coeff_str = m.group("coeff")
        if m.group(0).startswith("log"):
            log_coefficient += 1.0 if coeff_str is None else float(coeff_str)
        else:
            q = float(m.group("q"))
            if coeff_str is None:
                c = 1.0 if q > 0 else -1.0
            else:
                c = float(coeff_str)
            power_terms.append((c, q))
    return RadialPotential(power_terms=tuple(power_terms), log_coefficient=log_coefficient)


def _split_terms(compact: str) -> list[str]:
    # '+' separates terms except when it follows '*', ':', 'e' or 'E'
    # (sign of a coefficient or exponent).
    parts = []
    cur = []
    for i, ch in enumerate(compact):
        if ch == "+" and i > 0 and compact[i - 1] not in "*:eE":
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p for p in parts if p]


def potential_label(pot: RadialPotential) -> str:
    """Canonical spec-string form, e.g. 'pow:-1*-1+pow:1*0.2+log*1'."""
    bits = [f"pow:{q:g}*{c:g}" for c, q in pot.power_terms]
    if pot.log_coefficient != 0.0:
        bits.append(f"log*{pot.log_coefficient:g}")
    return "+".join(bits)

import math

import numpy as np
import pytest

from radspec.potentials import (
    PotentialError,
    QuantumNumbers,
    RadialPotential,
    evaluate_potential,
    parse_potential,
)


def test_pure_power_values():
    assert evaluate_potential(RadialPotential.pure_power(2.0), 1.0) == 1.0
    assert evaluate_potential(RadialPotential.pure_power(-1.0), 2.0) == -0.5


def test_coulomb_plus_linear_cancellation():
    pot = RadialPotential.coulomb_plus_linear(1.0, 1.0)
    assert evaluate_potential(pot, 1.0) == 0.0


def test_log_term():
    pot = RadialPotential.log(2.0)
    assert evaluate_potential(pot, math.e) == pytest.approx(2.0, rel=1e-15)


def test_rejects_nonpositive_radius():
    pot = RadialPotential.pure_power(1.0)
    with pytest.raises(PotentialError):
        evaluate_potential(pot, 0.0)
    with pytest.raises(PotentialError):
        evaluate_potential(pot, -1.0)
    with pytest.raises(PotentialError):
        pot.derivative(0.0)


def test_rejects_bad_exponents():
    with pytest.raises(PotentialError):
        RadialPotential(power_terms=((1.0, 0.0),))
    with pytest.raises(PotentialError):
        RadialPotential(power_terms=((1.0, 2.5),))
    with pytest.raises(PotentialError):
        RadialPotential(power_terms=((1.0, -1.5),))
    with pytest.raises(PotentialError):
        RadialPotential(power_terms=())


def test_derivative_matches_finite_differences():
    rng = np.random.default_rng(42)
    pot = RadialPotential(power_terms=((-1.3, -1.0), (0.7, 0.5), (2.0, 2.0)), log_coefficient=0.4)
    for r in rng.uniform(0.2, 5.0, size=12):
        h = 1e-6 * r
        fd = (pot(r + h) - pot(r - h)) / (2 * h)
        assert pot.derivative(r) == pytest.approx(fd, rel=1e-8)


def test_scaled_divides_through():
    pot = RadialPotential(power_terms=((-2.0, -1.0),), log_coefficient=3.0)
    half = pot.scaled(0.5)
    assert half(1.7) == pytest.approx(0.5 * pot(1.7), rel=1e-15)


@pytest.mark.parametrize(
    "spec,expected_terms,expected_log",
    [
        ("pow:-1", ((-1.0, -1.0),), 0.0),
        ("pow:2", ((1.0, 2.0),), 0.0),
        ("log", (), 1.0),
        ("log * 2.5", (), 2.5),
        ("pow:1 * 1 + pow:-1 * -1", ((1.0, 1.0), (-1.0, -1.0)), 0.0),
        ("pow:0.5*2+log*0.5", ((2.0, 0.5),), 0.5),
        ("  pow:-0.5 \t+ log ", ((-1.0, -0.5),), 1.0),
    ],
)
def test_parse_grammar(spec, expected_terms, expected_log):
    pot = parse_potential(spec)
    assert pot.power_terms == expected_terms
    assert pot.log_coefficient == expected_log


@pytest.mark.parametrize("bad", ["", "pow:", "pw:1", "pow:1*", "log:2", "pow:1 ** 2", "r^2"])
def test_parse_rejects(bad):
    with pytest.raises(PotentialError):
        parse_potential(bad)


def test_quantum_numbers_invariants():
    qn = QuantumNumbers(3, 2)
    assert qn.nodes == 2
    with pytest.raises(ValueError):
        QuantumNumbers(0, 0)
    with pytest.raises(ValueError):
        QuantumNumbers(1, -1)

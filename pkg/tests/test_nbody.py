import math

import numpy as np
import pytest

from radspec.nbody import (
    NBodyModel,
    build_jacobi_frame,
    nbody_energy_bounds,
    pair_sum_identity_check,
    quark_model_sweep,
    reduce_to_one_body,
)
from radspec.potentials import QuantumNumbers, RadialPotential
from radspec.solver import solve_radial

QN10 = QuantumNumbers(1, 0)


def test_frame_two_bodies():
    b = build_jacobi_frame(2).matrix
    s = 1.0 / math.sqrt(2.0)
    assert np.allclose(b, [[s, s], [s, -s]], atol=1e-15)


def test_frame_three_bodies():
    b = build_jacobi_frame(3).matrix
    assert np.allclose(b[0], np.ones(3) / math.sqrt(3.0), atol=1e-15)
    assert np.allclose(b[1], [1.0 / math.sqrt(2.0), -1.0 / math.sqrt(2.0), 0.0], atol=1e-15)
    assert np.allclose(b[2], np.array([1.0, 1.0, -2.0]) / math.sqrt(6.0), atol=1e-15)


@pytest.mark.parametrize("n", range(2, 9))
def test_frame_orthogonality(n):
    b = build_jacobi_frame(n).matrix
    assert np.max(np.abs(b @ b.T - np.eye(n))) < 1e-14


def test_frame_validation():
    with pytest.raises(ValueError):
        build_jacobi_frame(1)


def test_pair_identity_two_bodies():
    frame = build_jacobi_frame(2)
    lhs, rhs = pair_sum_identity_check(frame, [np.array([1.0, 0, 0]), np.zeros(3)])
    assert lhs == pytest.approx(1.0, rel=1e-14)
    assert rhs == pytest.approx(1.0, rel=1e-14)


def test_pair_identity_equilateral_triangle():
    frame = build_jacobi_frame(3)
    pts = [
        np.array([0.0, 0.0, 0.0]),
        np.array([1.0, 0.0, 0.0]),
        np.array([0.5, math.sqrt(3.0) / 2.0, 0.0]),
    ]
    lhs, rhs = pair_sum_identity_check(frame, pts)
    assert lhs == pytest.approx(3.0, rel=1e-14)
    assert rhs == pytest.approx(3.0, rel=1e-12)


def test_pair_identity_random_configurations():
    rng = np.random.default_rng(123)
    for _ in range(100):
        n = int(rng.integers(2, 7))
        frame = build_jacobi_frame(n)
        pts = rng.normal(scale=2.0, size=(n, 3))
        lhs, rhs = pair_sum_identity_check(frame, pts)
        assert rhs == pytest.approx(lhs, rel=1e-12)


def test_model_validation():
    with pytest.raises(ValueError):
        NBodyModel(n_bodies=1, mass=1.0, coulomb_a=1.0)
    with pytest.raises(ValueError):
        NBodyModel(n_bodies=2, mass=-1.0, coulomb_a=1.0)
    with pytest.raises(ValueError):
        NBodyModel(n_bodies=2, mass=1.0)  # neither form
    with pytest.raises(ValueError):
        NBodyModel(
            n_bodies=2, mass=1.0, coulomb_a=1.0, shape=RadialPotential.pure_power(2.0),
            v0=1.0, range_a=1.0,
        )  # both forms


def test_reduction_unit_plugin():
    model = NBodyModel(n_bodies=2, mass=1.0, v0=1.0, range_a=1.0,
                       shape=RadialPotential.pure_power(2.0))
    red = reduce_to_one_body(model)
    assert red.v == pytest.approx(1.0, rel=1e-15)
    assert red.energy_scale == pytest.approx(1.0, rel=1e-15)


def test_reduction_coupling_grows_with_n():
    m3 = NBodyModel(n_bodies=3, mass=1.0, v0=1.0, range_a=1.0,
                    shape=RadialPotential.pure_power(2.0))
    assert reduce_to_one_body(m3).v == pytest.approx(1.5, rel=1e-15)


def test_energy_map_round_trip():
    model = NBodyModel(n_bodies=4, mass=0.7, v0=2.0, range_a=1.3,
                       shape=RadialPotential.pure_power(2.0))
    red = reduce_to_one_body(model)
    for e in [-1.3, 0.0, 2.7]:
        assert red.from_physical(red.to_physical(e)) == pytest.approx(e, abs=1e-14)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_oscillator_collapse(n):
    """Harmonic pair forces: lower bound, Gaussian upper bound, and the
    reduced solve all agree at 3*sqrt(v)."""
    model = NBodyModel(n_bodies=n, mass=1.0, v0=1.0, range_a=1.0,
                       shape=RadialPotential.pure_power(2.0))
    red = reduce_to_one_body(model)
    expected = red.to_physical(3.0 * math.sqrt(red.v))
    lo, up = nbody_energy_bounds(model)
    assert lo == pytest.approx(expected, rel=1e-8)
    assert up == pytest.approx(expected, rel=1e-8)


def test_oscillator_collapse_direct_solve(cfg):
    model = NBodyModel(n_bodies=2, mass=1.0, v0=1.0, range_a=1.0,
                       shape=RadialPotential.pure_power(2.0))
    red = reduce_to_one_body(model)
    direct = solve_radial(RadialPotential(power_terms=((red.v, 2.0),)), QN10, cfg).energy
    lo, up = nbody_energy_bounds(model)
    assert red.to_physical(direct) == pytest.approx(lo, rel=1e-8)


def test_cornell_coulomb_limit():
    """b -> 0 keeps only the Coulomb part, whose ground bound has the
    closed form -(N a_c/2)^2 m/4 per pair factor (N-1)."""
    n, m, a_c = 2, 0.3, 0.35
    model = NBodyModel(n_bodies=n, mass=m, coulomb_a=a_c, linear_b=1e-14)
    lo, up = nbody_energy_bounds(model)
    closed = (n - 1) * (-((n * a_c / 2.0) ** 2) * m / 4.0)
    assert lo == pytest.approx(closed, rel=1e-6)
    assert up >= lo


def test_cornell_bounds_regression():
    """Frozen first-run values (no published data for these curves)."""
    model = NBodyModel(n_bodies=3, mass=0.3, coulomb_a=0.35, linear_b=0.2)
    lo, up = nbody_energy_bounds(model)
    assert lo == pytest.approx(2.700593, abs=1e-5)
    assert up == pytest.approx(2.743886, abs=1e-5)


def test_quark_sweep_ordering_and_exactness(cfg):
    b_grid = [0.05, 0.15, 0.3]
    rows = quark_model_sweep([2, 3, 4, 5], 0.3, 0.35, b_grid, cfg=cfg)
    assert len(rows) == 12
    for p in rows:
        assert p.lower <= p.upper
        assert p.exact == (p.n_bodies == 2)
    # energies grow with N at fixed b (regression observation)
    for b in b_grid:
        col = [p.lower for p in rows if p.linear_b == b]
        assert all(x < y for x, y in zip(col, col[1:]))


def test_quark_sweep_two_body_matches_direct(cfg):
    """The N = 2 curve equals an independent divide-through eigensolve."""
    m, a_c = 0.3, 0.35
    omega = 1.0 / m
    rows = quark_model_sweep([2], m, a_c, [0.1, 0.25], cfg=cfg)
    for p in rows:
        pot = RadialPotential(power_terms=((-a_c / omega, -1.0), (p.linear_b / omega, 1.0)))
        direct = omega * solve_radial(pot, QN10, cfg).energy
        assert p.lower == pytest.approx(direct, abs=1e-6)


def test_quark_sweep_validation():
    with pytest.raises(ValueError):
        quark_model_sweep([1], 0.3, 0.35, [0.1])
    with pytest.raises(ValueError):
        quark_model_sweep([2], 0.3, 0.35, [-0.1])

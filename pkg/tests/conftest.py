import time

import pytest

from radspec.interpolation import table1
from radspec.potentials import QuantumNumbers, RadialPotential
from radspec.solver import EigenSolveConfig, solve_radial


@pytest.fixture(scope="session", autouse=True)
def _warm_integrator():
    # first call compiles the integration kernel; keep that out of any
    # timed acceptance budget
    solve_radial(RadialPotential.pure_power(-1.0), QuantumNumbers(1, 0))


@pytest.fixture(scope="session")
def cfg():
    return EigenSolveConfig()


@pytest.fixture(scope="session")
def table_result(cfg):
    """The 25-state table, computed once per session, with its wall time."""
    t0 = time.perf_counter()
    rows = table1(cfg)
    elapsed = time.perf_counter() - t0
    return rows, elapsed

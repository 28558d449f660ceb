"""Shared fixtures for the maserengine test suite."""
import numpy as np
import pytest

from maserengine.config.models import EngineParams, QGridConfig, RunConfig
from maserengine.shared.constants import UNITS_TAG


def pytest_addoption(parser):
    """Add the --runslow option."""
    parser.addoption("--runslow", action="store_true", default=False, help="run slow tests")


def pytest_configure(config):
    """Register custom markers."""
    config.addinivalue_line("markers", "slow: long simulation, only run with --runslow")


def pytest_collection_modifyitems(config, items):
    """Skip slow tests unless --runslow is given."""
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded random generator."""
    return np.random.default_rng(20240611)


@pytest.fixture
def random_density():
    """Factory for random full-rank density matrices."""
    def make(rng: np.random.Generator, dim: int) -> np.ndarray:
        g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
        rho = g @ g.conj().T
        return rho / np.trace(rho).real
    return make


@pytest.fixture
def random_hermitian():
    """Factory for random Hermitian matrices."""
    def make(rng: np.random.Generator, dim: int) -> np.ndarray:
        g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
        return 0.5 * (g + g.conj().T)
    return make


@pytest.fixture
def params() -> EngineParams:
    """Default above-threshold level scheme on a small truncation."""
    return EngineParams(n_field=6)


@pytest.fixture
def small_params() -> EngineParams:
    """Weak coupling on a small truncation for fast integrations."""
    return EngineParams(g=1.0, n_field=6)


@pytest.fixture
def small_run_config() -> RunConfig:
    """Short above-threshold run on a 40-level field."""
    return RunConfig(
        name="small",
        units=UNITS_TAG,
        params=EngineParams(n_field=40),
        t_final=2.0,
        dt=5e-3,
        record_every=0.25,
        qgrid=QGridConfig(resolution=21),
    )

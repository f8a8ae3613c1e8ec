"""
Pytest Configuration and Fixtures

Provides shared graphs, bases and an isolated basis cache for all tests.
"""

from pathlib import Path

import numpy as np
import pytest
from hypothesis import HealthCheck
from hypothesis import settings as hypothesis_settings

from core.config import settings
from graphss.graph import GraphModel, OperatorKind, build_graph, generate, laplacian
from graphss.graph.graph import Graph
from graphss.spectral import SpectralBasis, eigendecompose

# property tests run under the function-scoped autouse cache fixture
hypothesis_settings.register_profile(
    "graphss", deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture]
)
hypothesis_settings.load_profile("graphss")


# ============================================================================
# ENVIRONMENT FIXTURES
# ============================================================================

@pytest.fixture(autouse=True)
def isolated_cache(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """
    Point the basis cache at a per-test directory.

    Scope: function (the user's cache is never touched)
    """
    cache_dir = tmp_path / "basis-cache"
    monkeypatch.setattr(settings, "cache_dir", cache_dir)
    return cache_dir


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator for test inputs"""
    return np.random.default_rng(20240601)


# ============================================================================
# SMALL GRAPHS
# ============================================================================

@pytest.fixture
def path2() -> Graph:
    return build_graph(2, [(0, 1, 1.0)])


@pytest.fixture
def path3() -> Graph:
    return build_graph(3, [(0, 1, 1.0), (1, 2, 1.0)])


@pytest.fixture
def path8() -> Graph:
    return generate(GraphModel.PATH, 8)


@pytest.fixture
def ring8() -> Graph:
    return generate(GraphModel.RING, 8)


@pytest.fixture
def triangle() -> Graph:
    return build_graph(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)])


@pytest.fixture
def bipartite16() -> Graph:
    """Connected random bipartite graph with equal halves of 8"""
    return generate(GraphModel.RANDOM_BIPARTITE, 16, seed=3)


# ============================================================================
# SENSOR GRAPH FIXTURES
# ============================================================================

@pytest.fixture(scope="session")
def sensor100() -> Graph:
    """
    Random sensor graph, N=100.

    Scope: session (generated once for all tests)
    """
    return generate(GraphModel.RANDOM_SENSOR, 100, seed=1)


@pytest.fixture(scope="session")
def sensor_basis(sensor100: Graph) -> SpectralBasis:
    """Combinatorial Laplacian basis of ``sensor100``"""
    return eigendecompose(laplacian(sensor100, OperatorKind.COMBINATORIAL))


@pytest.fixture(scope="session")
def sensor_basis_normalized(sensor100: Graph) -> SpectralBasis:
    return eigendecompose(laplacian(sensor100, OperatorKind.NORMALIZED))


@pytest.fixture(scope="session")
def sensor64() -> Graph:
    return generate(GraphModel.RANDOM_SENSOR, 64, seed=7)


@pytest.fixture(scope="session")
def sensor64_basis(sensor64: Graph) -> SpectralBasis:
    return eigendecompose(laplacian(sensor64, OperatorKind.COMBINATORIAL))

"""
Unit Tests for Graph Generators

Tests determinism, connectivity and model-specific structure.
"""

import numpy as np
import pytest

from core.config import settings
from core.exceptions import ConfigurationError, ConnectivityFailureError
from graphss.graph import (
    GeneratorParams,
    GraphModel,
    SensorWeighting,
    bipartite_partition,
    block_labels,
    default_clusters,
    generate,
)


@pytest.mark.unit
class TestDeterminism:
    """Same seed, same graph"""

    @pytest.mark.parametrize(
        "model,n",
        [
            (GraphModel.RANDOM_SENSOR, 50),
            (GraphModel.COMMUNITY, 100),
            (GraphModel.SWISS_ROLL, 60),
            (GraphModel.RANDOM_BIPARTITE, 20),
        ],
    )
    def test_same_seed_same_edges(self, model, n):
        a = generate(model, n, seed=5)
        b = generate(model, n, seed=5)
        assert a.edges == b.edges
        assert a.is_connected()

    def test_different_seed_different_graph(self):
        a = generate(GraphModel.RANDOM_SENSOR, 50, seed=1)
        b = generate(GraphModel.RANDOM_SENSOR, 50, seed=2)
        assert a.edges != b.edges


@pytest.mark.unit
class TestSensorGraphs:
    """Geometric sensor graphs"""

    def test_coordinates_in_unit_square(self, sensor100):
        assert sensor100.coords.shape == (100, 2)
        assert np.all((sensor100.coords >= 0.0) & (sensor100.coords <= 1.0))

    def test_every_vertex_has_k_neighbours(self, sensor100):
        degree_counts = np.count_nonzero(sensor100.adjacency, axis=1)
        assert degree_counts.min() >= 6

    def test_weights_in_unit_interval(self, sensor100):
        weights = np.array([w for _, _, w in sensor100.edges])
        assert np.all((weights > 0.0) & (weights <= 1.0))

    def test_threshold_weighting_is_denser_than_knn(self):
        threshold = generate(GraphModel.RANDOM_SENSOR, 100, seed=4)
        knn = generate(
            GraphModel.RANDOM_SENSOR, 100, GeneratorParams(weighting=SensorWeighting.KNN), seed=4
        )
        assert threshold.edge_count >= knn.edge_count

    def test_concentrated_layout(self):
        params = GeneratorParams(concentrated=True)
        g = generate(GraphModel.RANDOM_SENSOR, 100, params, seed=2)
        dense = g.coords[:40]
        assert np.all(dense <= 0.25)


@pytest.mark.unit
class TestCombinatorialModels:
    """Path, ring, community and bipartite models"""

    def test_path_and_ring_edge_counts(self):
        assert generate(GraphModel.PATH, 10).edge_count == 9
        assert generate(GraphModel.RING, 10).edge_count == 10

    def test_ring_needs_three_vertices(self):
        with pytest.raises(ConfigurationError):
            generate(GraphModel.RING, 2)

    def test_too_few_vertices(self):
        with pytest.raises(ConfigurationError):
            generate(GraphModel.PATH, 1)

    def test_community_keeps_labels(self):
        g = generate(GraphModel.COMMUNITY, 100, seed=3)
        np.testing.assert_array_equal(np.bincount(g.labels), [25, 25, 25, 25])

    def test_bipartite_halves(self):
        g = generate(GraphModel.RANDOM_BIPARTITE, 20, seed=9)
        part = bipartite_partition(g)
        assert part.set_l == tuple(range(10))
        assert part.set_h == tuple(range(10, 20))

    def test_bipartite_needs_even_n(self):
        with pytest.raises(ConfigurationError):
            generate(GraphModel.RANDOM_BIPARTITE, 9)

    def test_retry_budget_exhausted(self):
        """Edgeless bipartite graphs are never connected"""
        params = GeneratorParams(p_edge=1e-9)
        with pytest.raises(ConnectivityFailureError) as exc_info:
            generate(GraphModel.RANDOM_BIPARTITE, 10, params, seed=0, retries=3)
        assert exc_info.value.attempts == 3

    def test_params_reject_inverted_weight_range(self):
        with pytest.raises(ValueError):
            GeneratorParams(weight_low=2.0, weight_high=1.0)

    def test_explicit_zero_retries_rejected(self):
        with pytest.raises(ConfigurationError):
            generate(GraphModel.PATH, 4, retries=0)

    def test_explicit_retries_override_settings(self, monkeypatch):
        monkeypatch.setattr(settings, "connectivity_retries", 50)
        params = GeneratorParams(p_edge=1e-9)
        with pytest.raises(ConnectivityFailureError) as exc_info:
            generate(GraphModel.RANDOM_BIPARTITE, 10, params, seed=0, retries=1)
        assert exc_info.value.attempts == 1

    def test_community_block_densities(self):
        g = generate(GraphModel.COMMUNITY, 200, seed=5)
        same = g.labels[:, None] == g.labels[None, :]
        upper = np.triu(np.ones((200, 200), dtype=bool), k=1)
        linked = g.adjacency > 0
        intra = linked[same & upper].mean()
        inter = linked[~same & upper].mean()
        assert 0.25 <= intra <= 0.35
        assert inter < 0.01
        assert intra / inter > 50


@pytest.mark.unit
class TestDefaultClusters:
    """Vertex -> cluster maps"""

    def test_block_labels_balanced(self):
        np.testing.assert_array_equal(block_labels(6, 3), [0, 0, 1, 1, 2, 2])

    def test_planted_labels_used(self):
        g = generate(GraphModel.COMMUNITY, 100, seed=3)
        np.testing.assert_array_equal(default_clusters(g, 4), g.labels)

    def test_kmeans_on_coordinates(self, sensor100):
        clusters = default_clusters(sensor100, 4, seed=0)
        assert clusters.shape == (100,)
        assert set(np.unique(clusters)) <= {0, 1, 2, 3}

    def test_blocks_without_metadata(self, path8):
        np.testing.assert_array_equal(default_clusters(path8, 2), [0, 0, 0, 0, 1, 1, 1, 1])

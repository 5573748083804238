# -*- coding: utf-8 -*-
from __future__ import absolute_import, print_function, division

import numpy as np
import pytest

from pyOFG.errors import ValidationError
from pyOFG.graph.flip_graph import build_ofg_uniform, build_ofg_general
from pyOFG.graph.metrics import (symmetry_classes, bfs_metrics, is_bipartite,
                                 graph_distance, diameter_witness,
                                 path_length_gaps, distance_to_complement)
from pyOFG.vertex.assignment import complement, is_valid_uniform
from pyOFG.vertex.crease_pattern import CreasePattern

EXAMPLE = CreasePattern([45, 15, 60, 85, 75, 80])


@pytest.mark.parametrize('n', range(1, 7))
def test_diameter_is_n(n):
    metrics = bfs_metrics(build_ofg_uniform(n))
    assert metrics.connected
    assert metrics.diameter == n


@pytest.mark.parametrize('n', range(1, 5))
def test_symmetry_reduction_is_exact(n):
    g = build_ofg_uniform(n)
    reduced = bfs_metrics(g, symmetry=True)
    full = bfs_metrics(g, symmetry=False)
    assert reduced == full
    assert len(full.eccentricities) == len(g)


def test_symmetry_classes():
    g = build_ofg_uniform(3)
    classes = symmetry_classes(g)
    assert (np.diff(classes.representatives) > 0).all()
    assert classes.labels.shape == (len(g),)
    for i, mv in enumerate(g.vertices):
        assert classes.labels[g.index_of(complement(mv))] == classes.labels[i]
    with pytest.raises(ValidationError):
        symmetry_classes(build_ofg_general(EXAMPLE))


def test_workers_do_not_change_the_result():
    g = build_ofg_uniform(5)
    assert bfs_metrics(g, symmetry=False, workers=3) == \
        bfs_metrics(g, symmetry=False, workers=1)


def test_distances():
    g = build_ofg_uniform(2)
    assert graph_distance(g, 'MMMV', 'VVVM') == 2
    assert graph_distance(g, 'MMMV', 'MMMV') == 0


@pytest.mark.parametrize('n', range(1, 7))
def test_witness_is_n_flips_from_its_complement(n):
    witness = diameter_witness(n)
    assert is_valid_uniform(witness)
    assert distance_to_complement(build_ofg_uniform(n), witness) == n


def test_general_example_is_disconnected():
    g = build_ofg_general(EXAMPLE)
    with pytest.warns(UserWarning):
        metrics = bfs_metrics(g, symmetry=True)
    assert not metrics.connected
    assert metrics.diameter == 2
    assert set(metrics.eccentricities.values()) == {2}
    assert is_bipartite(g)
    first, second = g.vertex(int(g.edges[0, 0])), None
    for mv in g.vertices:
        if graph_distance(g, first, mv) is None:
            second = mv
            break
    assert second is not None


@pytest.mark.parametrize('n', range(1, 7))
def test_uniform_graphs_are_bipartite(n):
    assert is_bipartite(build_ofg_uniform(n))


@pytest.mark.parametrize('algorithm', ['halves', 'shwoop'])
@pytest.mark.parametrize('n', range(2, 6))
def test_path_length_gaps(n, algorithm):
    g = build_ofg_uniform(n)
    gaps = path_length_gaps(g, algorithm)
    assert sum(gaps.values()) == len(g) ** 2
    assert min(gaps) >= 0
    assert gaps[0] > 0
    with pytest.raises(ValidationError):
        path_length_gaps(build_ofg_uniform(2), 'dijkstra')

# -*- coding: utf-8 -*-
from __future__ import absolute_import, print_function, division

import json

import pytest

from pyOFG.errors import ValidationError
from pyOFG.graph.flip_graph import build_ofg_general, build_ofg_uniform
from pyOFG.vertex.assignment import flip_face, is_valid_uniform
from pyOFG.vertex.crease_pattern import CreasePattern, uniform_pattern
from pyOFG.vertex.embedding import (embed_into_uniform,
                                    count_rotational_copies,
                                    count_reflected_copies)

EXAMPLE = CreasePattern([45, 15, 60, 85, 75, 80])


@pytest.fixture(scope='module')
def example_graph():
    return build_ofg_general(EXAMPLE)


def test_identity_rotation(example_graph):
    embedding = embed_into_uniform(EXAMPLE, 0)
    for nu in example_graph.vertices:
        assert embedding.image(nu) == nu
        assert is_valid_uniform(embedding.image(nu))


@pytest.mark.parametrize('reflected', [False, True])
def test_every_rotation_preserves_edges(example_graph, reflected):
    uniform = build_ofg_uniform(3)
    edges = {(int(u), int(v)) for u, v, _ in uniform.edges}
    for r in range(6):
        embedding = embed_into_uniform(EXAMPLE, r, reflected)
        assert embedding.preserves_edges(example_graph)
        for u, v, _ in example_graph.edges:
            first = uniform.index_of(embedding.image(example_graph.vertex(u)))
            second = uniform.index_of(
                embedding.image(example_graph.vertex(v)))
            assert (min(first, second), max(first, second)) in edges


@pytest.mark.parametrize('reflected', [False, True])
def test_face_image_commutes_with_flips(example_graph, reflected):
    for r in range(6):
        embedding = embed_into_uniform(EXAMPLE, r, reflected)
        for nu in example_graph.vertices:
            for k in range(1, 7):
                assert embedding.image(flip_face(nu, k)) == \
                    flip_face(embedding.image(nu), embedding.face_image(k))


def test_rotational_copies_of_example(example_graph):
    images = [embed_into_uniform(EXAMPLE, r).vertex_images(example_graph)
              for r in range(6)]
    # valid iff e2 != e3, e5 != e6 and e1 == e4: invariant under r = 3
    for r in range(3):
        assert images[r] == images[r + 3]
    assert len(set(images[:3])) == 3
    assert count_rotational_copies(EXAMPLE, example_graph) == 3
    assert count_rotational_copies(EXAMPLE) == 3


def test_reflected_copies_are_reported_separately(example_graph):
    assert count_reflected_copies(EXAMPLE, example_graph) == 0
    # 60,100,120,80 has no such symmetry
    pattern = CreasePattern([60, 100, 120, 80])
    assert count_rotational_copies(pattern) == 4


def test_to_json(example_graph):
    document = json.loads(embed_into_uniform(EXAMPLE, 2).to_json(
        example_graph))
    assert document['rotation'] == 2
    assert document['reflected'] is False
    assert len(document['pairs']) == 8
    for c_mv, a_mv in document['pairs']:
        assert len(c_mv) == len(a_mv) == 6


def test_rejects_uniform_and_bad_rotation():
    with pytest.raises(ValidationError):
        embed_into_uniform(uniform_pattern(3), 0)
    with pytest.raises(ValidationError):
        count_rotational_copies(uniform_pattern(3))
    with pytest.raises(ValidationError):
        embed_into_uniform(EXAMPLE, 6)
    with pytest.raises(ValidationError):
        embed_into_uniform(EXAMPLE, -1)

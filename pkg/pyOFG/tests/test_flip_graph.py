# -*- coding: utf-8 -*-
from __future__ import absolute_import, print_function, division

import json
import re

import pytest

from pyOFG.errors import ValidationError, EnumerationLimitError
from pyOFG.headers import MAX_N_ENV_VARIABLE
from pyOFG.graph.flip_graph import (FlipGraph, build_ofg_uniform,
                                    build_ofg_general, export_graph,
                                    read_graph_json)
from pyOFG.utils import full_mask
from pyOFG.vertex.assignment import (MVAssignment, flip_face, complement,
                                     is_valid_uniform, uniform_degree)
from pyOFG.vertex.crease_pattern import CreasePattern, uniform_pattern

EXAMPLE = CreasePattern([45, 15, 60, 85, 75, 80])


def test_n1_is_a_multigraph():
    g = build_ofg_uniform(1)
    assert [str(mv) for mv in g.vertices] == ['VV', 'MM']
    assert g.edges.tolist() == [[0, 1, 1], [0, 1, 2]]
    assert g.multigraph
    assert g.to_networkx().number_of_edges() == 2


@pytest.mark.parametrize('n, vertices, edges', [(2, 8, 16), (3, 30, 84),
                                                (4, 112, 400)])
def test_sizes(n, vertices, edges):
    g = build_ofg_uniform(n)
    assert (len(g), len(g.edges)) == (vertices, edges)
    assert not g.multigraph


@pytest.mark.parametrize('n', range(1, 5))
def test_edges_are_exactly_the_valid_flips(n):
    g = build_ofg_uniform(n)
    for u, v, k in g.edges:
        assert u < v
        assert flip_face(g.vertex(u), k) == g.vertex(v)
    degrees = g.degrees()
    assert degrees.sum() == 2 * len(g.edges)
    assert degrees.tolist() == [uniform_degree(mv) for mv in g.vertices]


def test_complement_is_an_automorphism():
    g = build_ofg_uniform(4)
    edges = {(int(g.codes[u]), int(g.codes[v])) for u, v, _ in g.edges}
    full = full_mask(8)
    mapped = {tuple(sorted((a ^ full, b ^ full))) for a, b in edges}
    assert mapped == edges
    for mv in g.vertices:
        assert is_valid_uniform(complement(mv))


def test_enumeration_limit(monkeypatch):
    with pytest.raises(EnumerationLimitError):
        build_ofg_uniform(3, limit=2)
    monkeypatch.setenv(MAX_N_ENV_VARIABLE, '2')
    with pytest.raises(EnumerationLimitError):
        build_ofg_uniform(3)
    assert len(build_ofg_uniform(2)) == 8


def test_general_on_equal_angles_matches_uniform():
    general = build_ofg_general(uniform_pattern(2))
    uniform = build_ofg_uniform(2)
    assert general.codes.tolist() == uniform.codes.tolist()
    assert general.edges.tolist() == uniform.edges.tolist()
    assert general.is_isomorphic(uniform)


def test_general_example_is_two_four_cycles():
    g = build_ofg_general(EXAMPLE)
    assert (len(g), len(g.edges)) == (8, 8)
    assert (g.degrees() == 2).all()
    assert sorted(set(g.edges[:, 2].tolist())) == [2, 5]


def test_index_of():
    g = build_ofg_uniform(2)
    assert g.vertex(g.index_of('MMMV')) == MVAssignment.from_string('MMMV')
    with pytest.raises(ValidationError):
        g.index_of('MMMM')
    with pytest.raises(ValidationError):
        g.index_of('MMVVMM')


def test_adjacency():
    g = build_ofg_uniform(3)
    matrix = g.adjacency()
    assert (matrix != matrix.T).nnz == 0
    assert matrix.nnz == 2 * len(g.edges)
    assert build_ofg_uniform(1).adjacency().nnz == 2


def test_dot_export():
    document = export_graph(build_ofg_uniform(2), 'dot')
    assert document.startswith('graph ofg_a2n {')
    assert len(re.findall(r'^  "[MV]+";$', document, re.M)) == 8
    assert len(re.findall(r' -- ', document)) == 16
    assert '"MMMV" -- "MVVV" [label="2"];' in document or \
        '"MVVV" -- "MMMV" [label="2"];' in document
    document = export_graph(build_ofg_uniform(1), 'dot')
    assert len(re.findall(r'^  "[MV]+";$', document, re.M)) == 2
    assert len(re.findall(r'"VV" -- "MM"', document)) == 2
    assert export_graph(build_ofg_general(EXAMPLE), 'dot').startswith(
        'graph ofg_c {')


def test_csv_export():
    lines = export_graph(build_ofg_uniform(2), 'csv').splitlines()
    assert lines[0] == 'u_mv,v_mv,face'
    assert len(lines) == 17


@pytest.mark.parametrize('g', [build_ofg_uniform(1), build_ofg_uniform(3),
                               build_ofg_general(EXAMPLE)])
def test_json_round_trip(g):
    document = export_graph(g, 'json')
    data = json.loads(document)
    assert data['degree'] == g.degree
    assert len(data['vertices']) == len(g)
    again = read_graph_json(document)
    assert export_graph(again, 'json') == document
    assert again.pattern == g.pattern


def test_bad_documents():
    with pytest.raises(ValidationError):
        export_graph(build_ofg_uniform(2), 'png')
    document = json.loads(export_graph(build_ofg_uniform(2), 'json'))
    document['edges'][0][2] = 3 if document['edges'][0][2] != 3 else 1
    with pytest.raises(ValidationError):
        read_graph_json(json.dumps(document))
    with pytest.raises(ValidationError):
        read_graph_json('{"degree": 4}')
    with pytest.raises(ValidationError):
        FlipGraph([3, 1], 2, [])

# -*- coding: utf-8 -*-
from __future__ import absolute_import, print_function, division

import numpy as np
import pytest

from pyOFG.errors import EnumerationLimitError, ValidationError
from pyOFG.graph.counting import vertex_count_formula, edge_count_formula
from pyOFG.graph.flip_graph import build_ofg_general
from pyOFG.graph.metrics import is_bipartite
from pyOFG.utils import popcount
from pyOFG.vertex.assignment import MVAssignment, is_valid_uniform
from pyOFG.vertex.crease_pattern import CreasePattern, uniform_pattern
from pyOFG.vertex.general import (crimp_plan, crimp_trace,
                                  is_valid_general, valid_mask_general,
                                  big_little_big_faces,
                                  passes_big_little_big,
                                  enumerate_valid_general)

EXAMPLE = CreasePattern([45, 15, 60, 85, 75, 80])

# two equal minimal angles in a row
EVEN_RUN = CreasePattern([100, 20, 20, 70, 60, 90])

DEGREE_FOUR = [CreasePattern([60, 100, 120, 80]),
               CreasePattern([30, 90, 150, 90]),
               CreasePattern(['85/2', '175/2', '275/2', '185/2'])]


def test_example_has_eight_valid_assignments():
    valid = enumerate_valid_general(EXAMPLE)
    assert valid.size == 8
    assert (np.diff(valid.astype(np.int64)) > 0).all()
    for code in valid:
        mv = MVAssignment(int(code), 6)
        # c2 != c3, c5 != c6 and c1 == c4
        assert mv.crease(2) != mv.crease(3)
        assert mv.crease(5) != mv.crease(6)
        assert mv.crease(1) == mv.crease(4)


def test_is_valid_general_scalar():
    assert is_valid_general(EXAMPLE, MVAssignment.from_string('MMVMVM'))
    assert not is_valid_general(EXAMPLE, MVAssignment.from_string('MMMVVM'))
    with pytest.raises(ValidationError):
        is_valid_general(EXAMPLE, MVAssignment.from_string('MMMV'))


def test_crimp_plan_of_example():
    plan = crimp_plan(EXAMPLE)
    assert [step.slots for step in plan.steps] == [(1, 2), (4, 5)]
    assert all(step.odd for step in plan.steps)
    assert sorted(plan.final_slots) == [0, 3]


def test_crimp_plan_of_even_run():
    plan = crimp_plan(EVEN_RUN)
    first = plan.steps[0]
    assert first.slots == (1, 2, 3)
    assert not first.odd
    assert first.residual == 6
    assert 6 in plan.final_slots
    assert enumerate_valid_general(EVEN_RUN).size == 12


@pytest.mark.parametrize('n', range(1, 6))
def test_agrees_with_maekawa_on_equal_angles(n):
    codes = np.arange(1 << (2 * n), dtype=np.uint64)
    expected = np.abs(2 * popcount(codes) - 2 * n) == 2
    mask = valid_mask_general(uniform_pattern(n), codes)
    assert (mask == expected).all()


def test_scalar_and_vectorized_agree():
    codes = np.arange(64, dtype=np.uint64)
    mask = valid_mask_general(EVEN_RUN, codes)
    for code in codes:
        mv = MVAssignment(int(code), 6)
        assert is_valid_general(EVEN_RUN, mv) == mask[int(code)]


@pytest.mark.parametrize('pattern', DEGREE_FOUR)
def test_unique_strict_minimum_leaves_four(pattern):
    assert enumerate_valid_general(pattern).size == 4


@pytest.mark.parametrize('pattern', [EXAMPLE, EVEN_RUN] + DEGREE_FOUR)
def test_valid_assignments_satisfy_necessary_conditions(pattern):
    for code in enumerate_valid_general(pattern):
        mv = MVAssignment(int(code), pattern.degree)
        assert is_valid_uniform(mv)
        assert passes_big_little_big(pattern, mv)
    g = build_ofg_general(pattern)
    assert is_bipartite(g)
    assert len(g) <= vertex_count_formula(pattern.n)
    assert len(g.edges) <= edge_count_formula(pattern.n)


def test_big_little_big_faces():
    assert big_little_big_faces(EXAMPLE) == [2, 5]
    assert big_little_big_faces(uniform_pattern(3)) == []
    assert not passes_big_little_big(EXAMPLE,
                                     MVAssignment.from_string('MMMVVV'))


def test_crimp_trace():
    lines = crimp_trace(EXAMPLE, MVAssignment.from_string('MMVMVM'))
    assert len(lines) == 3
    assert lines[-1].endswith('(valid)')
    lines = crimp_trace(EXAMPLE, MVAssignment.from_string('MMMVVM'))
    assert len(lines) == 1
    assert lines[0].endswith('(blocked)')


def test_degree_guard():
    with pytest.raises(EnumerationLimitError):
        enumerate_valid_general(EXAMPLE, max_degree=4)

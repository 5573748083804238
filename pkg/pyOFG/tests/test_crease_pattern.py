# -*- coding: utf-8 -*-
from __future__ import absolute_import, print_function, division

from fractions import Fraction

import pytest

from pyOFG.errors import ValidationError
from pyOFG.vertex.crease_pattern import CreasePattern, uniform_pattern

EXAMPLE = [45, 15, 60, 85, 75, 80]


def test_general_pattern():
    c = CreasePattern(EXAMPLE)
    assert (c.degree, c.n, c.uniform) == (6, 3, False)
    assert c.angle(2) == 15
    assert str(c) == '45,15,60,85,75,80'
    assert CreasePattern.from_string(' 45, 15,60,85 ,75,80') == c


def test_uniform_pattern():
    c = uniform_pattern(3)
    assert c.uniform
    assert c.angles == (Fraction(60),) * 6
    assert CreasePattern.from_string(','.join(['180/7'] * 14)).uniform
    assert uniform_pattern(1).angles == (180, 180)


@pytest.mark.parametrize('angles', [
    [120, 120, 120],         # odd degree
    [360],                   # degree 1
    [90, 90, 90, 80],        # sum is not 360
    [100, 80, 100, 80],      # alternating sum is 40
    [0, 180, 180, 0],        # empty sector
    [90.0, 90, 90, 90],      # inexact
    ])
def test_rejects(angles):
    with pytest.raises(ValidationError):
        CreasePattern(angles)


def test_immutable():
    c = CreasePattern(EXAMPLE)
    with pytest.raises(AttributeError):
        c.foo = 1
    assert hash(c) == hash(CreasePattern(EXAMPLE))
    with pytest.raises(ValidationError):
        c.angle(7)

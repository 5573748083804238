# -*- coding: utf-8 -*-
"""
pyOFG: origami flip graphs of flat-foldable single vertices
===========================================================

**pyOFG** models single-vertex crease patterns and their mountain-valley
(MV) assignments, builds the origami flip graph whose vertices are the
valid assignments and whose edges are single face flips, finds flip paths
between assignments of the equal-angle vertex and checks the closed-form
vertex, edge, degree and diameter counts against brute force.

:author:
    pyOFG developers

:copyright:
    pyOFG developers

:license:
    This code is distributed under the terms of the
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""
from __future__ import absolute_import, print_function, division

__version__ = '0.1.0'

from . import utils
from . import vertex
from . import paths
from . import graph

from .errors import (OFGError, ValidationError, EnumerationLimitError,
                     ConsistencyError)
from .vertex import MVAssignment, CreasePattern
from .paths import FlipPath, fea_shwoop, fea_halves, verify_path
from .graph import FlipGraph, build_ofg_uniform, build_ofg_general
from .ofg_metadata import (read_pattern, write_pattern, read_path,
                           write_path)

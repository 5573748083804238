# -*- coding: utf-8 -*-
"""
Single-vertex crease patterns, MV assignments and face flips.
"""
from __future__ import absolute_import, print_function, division

from .assignment import (MVAssignment, maekawa_sum, majority,
                         is_valid_uniform, is_flippable, flip_face,
                         complement, rotate, reflect, flippable_faces,
                         uniform_degree)
from .crease_pattern import CreasePattern, uniform_pattern
from .sets import CreaseSet, FaceSet, diff_set, between_faces, boundary
from .general import (is_valid_general, crimp_plan, crimp_trace,
                      big_little_big_faces, passes_big_little_big,
                      enumerate_valid_general)
from .embedding import (EmbeddingMap, embed_into_uniform,
                        count_rotational_copies, count_reflected_copies)

# -*- coding: utf-8 -*-
"""
Flip paths between valid MV assignments of the equal-angle vertex.
"""
from __future__ import absolute_import, print_function, division

from .flip_path import FlipPath, verify_path, first_failure
from .halves import fea_halves, halves_face_set
from .shwoop import fea_shwoop

# -*- coding: utf-8 -*-
"""
Various utilities for pyOFG.
"""
from __future__ import absolute_import, print_function, division

from .utils import (binomial, exact_division, parse_rational,
                    parse_angle_list, get_enumeration_limit, check_n,
                    full_mask, face_mask, popcount, rotate_bits,
                    reflect_bits)

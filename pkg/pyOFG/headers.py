# -*- coding: utf-8 -*-
"""
Constants, codes and format tables shared across pyOFG.

.. module:: headers

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

from fractions import Fraction

# Largest n (the vertex has degree 2n) enumerated by brute force unless
# overridden by the environment or an explicit argument.
DEFAULT_MAX_N = 13
MAX_N_ENV_VARIABLE = 'OFG_MAX_N'

# General (non-uniform) vertices enumerate all 2^(2n) assignments.
DEFAULT_MAX_GENERAL_DEGREE = 20

# Enumerations above this n print a warning: they take a while.
LARGE_N_WARNING = 11

# Number of combination ranks unranked per numpy chunk.
ENUMERATION_CHUNK_SIZE = 1 << 20

FULL_TURN = Fraction(360)

MOUNTAIN = 1
VALLEY = -1

MV_CHARACTERS = {MOUNTAIN : 'M',
                 VALLEY   : 'V'}
MV_VALUES = {'M' : MOUNTAIN,
             'V' : VALLEY}

MAJORITY = {'mountain' : (MOUNTAIN,),
            'valley'   : (VALLEY,),
            'both'     : (MOUNTAIN, VALLEY)}

EXPORT_FORMATS = ('dot', 'json', 'csv')

DOT_GRAPH_NAME = {True  : 'ofg_a2n',
                  False : 'ofg_c'}

CSV_HEADER = 'u_mv,v_mv,face'

PATH_ALGORITHMS = ('shwoop', 'halves')

COUNT_TARGETS = ('vertices', 'edges', 'degrees')
COUNT_METHODS = ('brute', 'formula', 'both')
DIAMETER_METHODS = ('bfs', 'formula', 'both')
SEQUENCE_METHODS = ('formula', 'both')

# exit status and machine readable codes of the command line interface
EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_CONSISTENCY = 2

ERROR_CODES = {
    'validation'  : 'E_VALIDATION',
    'limit'       : 'E_LIMIT',
    'consistency' : 'E_CONSISTENCY',
    'usage'       : 'E_USAGE',
    'io'          : 'E_IO',
    }

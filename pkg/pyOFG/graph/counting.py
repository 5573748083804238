# -*- coding: utf-8 -*-
"""
Vertex, edge and degree counts of :math:`{\\rm OFG}(A_{2n})`, in closed
form and by brute force.

The brute force counts never materialize the graph. The degree of a valid
assignment :math:`\\mu` is :math:`2n` minus the number of its blocked
faces, and a face is blocked exactly when both its creases carry the
minority label. With the minority creases as a bit mask ``m`` that is
``popcount(m & rotr(m, 1))``, counted cyclically so that face
:math:`\\alpha_{2n}` is included.

.. module:: counting

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
import sys
import warnings

import numpy as np
from obspy.core.util import AttribDict

from ..errors import ValidationError, ConsistencyError, EnumerationLimitError
from ..headers import COUNT_TARGETS, COUNT_METHODS, MOUNTAIN, LARGE_N_WARNING
from ..utils import (binomial, exact_division, check_n, full_mask, popcount,
                     rotate_bits, get_enumeration_limit)
from .enumeration import iter_valid_chunks


def vertex_count_formula(n):
    """
    :math:`2\\binom{2n}{n-1}`.

    >>> vertex_count_formula(6)
    1584
    """
    n = check_n(n)
    return 2 * binomial(2 * n, n - 1)


def edge_count_formula(n):
    """
    :math:`\\frac{(n+1)(3n-2)}{2n-1}\\binom{2n}{n-1}`, evaluated exactly.

    Raises
    ------
    ~pyOFG.errors.ConsistencyError
        If the division leaves a remainder.

    Examples
    --------
    >>> [edge_count_formula(n) for n in range(1, 6)]
    [2, 16, 84, 400, 1820]
    """
    n = check_n(n)
    return exact_division((n + 1) * (3 * n - 2) * binomial(2 * n, n - 1),
                          2 * n - 1)


def degree_count_formula(n, k):
    """
    Number :math:`f_k(2n)` of vertices of degree ``k`` in
    :math:`{\\rm OFG}(A_{2n})`:
    :math:`\\frac{4n}{n+1}\\binom{n+1}{k-n-1}\\binom{n-2}{k-n-2}` for
    :math:`n+2 \\le k \\le 2n` and 0 otherwise.

    Parameters
    ----------
    n : int
        ``n >= 2``.

    k : int
        Vertex degree.

    Examples
    --------
    >>> degree_count_formula(4, 7)
    64
    >>> degree_count_formula(4, 3)
    0
    """
    n = check_n(n, minimum=2)
    if not n + 2 <= k <= 2 * n:
        return 0
    return exact_division(4 * n * binomial(n + 1, k - n - 1) *
                          binomial(n - 2, k - n - 2), n + 1)


def degree_count_majority(n, b):
    """
    Number of majority-mountain valid assignments of :math:`A_{2n}` with
    exactly ``b`` non-flippable faces,
    :math:`\\frac{2n}{n+1}\\binom{n+1}{n-b-1}\\binom{n-2}{b}`. By the
    mountain-valley symmetry twice this is :math:`f_{2n-b}(2n)`.
    """
    n = check_n(n, minimum=2)
    if not 0 <= b <= n - 2:
        return 0
    return exact_division(2 * n * binomial(n + 1, n - b - 1) *
                          binomial(n - 2, b), n + 1)


def degree_histogram_formula(n):
    """
    ``{k: f_k(2n)}`` for every ``n + 2 <= k <= 2n``.
    """
    n = check_n(n, minimum=2)
    return {k: degree_count_formula(n, k) for k in range(n + 2, 2 * n + 1)}


def bad_face_probability(n):
    """
    Probability that a uniformly random face of a uniformly random valid
    assignment of :math:`A_{2n}` is not flippable,
    :math:`\\frac{(n-1)(n-2)}{2n(2n-1)}`.
    """
    n = check_n(n)
    return Fraction((n - 1) * (n - 2), 2 * n * (2 * n - 1))


def expected_degree(n):
    """
    Average vertex degree :math:`2n(1 - p)` with ``p`` the
    :func:`bad_face_probability`; equals :math:`2|E|/|V|`.
    """
    n = check_n(n)
    return 2 * n * (1 - bad_face_probability(n))


def diameter_formula(n):
    """
    The diameter of :math:`{\\rm OFG}(A_{2n})`, which is ``n``.
    """
    return check_n(n)


def _check_limit(n, limit):
    n = check_n(n)
    limit = get_enumeration_limit(limit)
    if n > limit:
        msg = 'n = {} exceeds the enumeration limit of {}'
        raise EnumerationLimitError(msg.format(n, limit))
    if n > LARGE_N_WARNING:
        warnings.warn('Brute force count over OFG(A_{}) takes a while'
                      .format(2 * n))
    return n


def uniform_degrees(codes, degree, sign):
    """
    Vectorized vertex degrees of valid assignments of one Maekawa class.

    Parameters
    ----------
    codes : array-like
        Packed valid assignments.

    degree : int
        :math:`2n`.

    sign : int
        +1 if every code is majority-mountain, -1 if majority-valley.
    """
    codes = np.asarray(codes, dtype=np.uint64)
    if sign == MOUNTAIN:
        minority = ~codes & np.uint64(full_mask(degree))
    else:
        minority = codes
    blocked = popcount(minority & rotate_bits(minority, -1, degree))
    return degree - blocked


def _iter_degrees(n, limit, verbose):
    n = _check_limit(n, limit)
    for sign, codes in iter_valid_chunks(n, 'both'):
        if verbose:
            print('A_{}: degrees of {} codes of majority {:+d}'.format(
                2 * n, codes.size, sign))
            sys.stdout.flush()
        yield uniform_degrees(codes, 2 * n, sign)


def vertex_count_brute(n, limit=None, verbose=False):
    """
    Number of valid assignments of :math:`A_{2n}`, by enumeration.
    """
    return sum(int(degrees.size)
               for degrees in _iter_degrees(n, limit, verbose))


def edge_count_brute(n, limit=None, verbose=False):
    """
    Number of edges of :math:`{\\rm OFG}(A_{2n})`: half the sum of the
    vertex degrees over every valid assignment.

    For ``n = 1`` both faces join ``MM`` and ``VV``, giving 2.

    Raises
    ------
    ~pyOFG.errors.EnumerationLimitError
        If ``n`` exceeds the enumeration limit.
    """
    total = sum(int(degrees.sum())
                for degrees in _iter_degrees(n, limit, verbose))
    return exact_division(total, 2)


def degree_histogram_brute(n, limit=None, verbose=False):
    """
    ``{degree: number of vertices}`` of :math:`{\\rm OFG}(A_{2n})`, by
    enumeration.

    >>> degree_histogram_brute(3)
    {5: 12, 6: 18}
    """
    n = check_n(n)
    counts = np.zeros(2 * n + 1, dtype=np.int64)
    for degrees in _iter_degrees(n, limit, verbose):
        counts += np.bincount(degrees, minlength=2 * n + 1)
    return {k: int(count) for k, count in enumerate(counts) if count}


def edge_count_sequence(max_n, method='formula', brute_max=9, limit=None,
                        verbose=False):
    """
    Edge counts of :math:`{\\rm OFG}(A_{2n})` for ``n = 1 .. max_n``.

    Parameters
    ----------
    max_n : int
        Last term.

    method : {'formula', 'brute', 'both'}
        ``both`` evaluates the formula and checks it against brute force
        for every ``n <= brute_max``.

    brute_max : int
        Largest ``n`` brute forced by ``method='both'``.

    Raises
    ------
    ~pyOFG.errors.ConsistencyError
        On any disagreement.

    Examples
    --------
    >>> edge_count_sequence(5)
    [2, 16, 84, 400, 1820]
    """
    max_n = check_n(max_n)
    if method not in COUNT_METHODS:
        msg = 'method must be one of {}, got {!r}'
        raise ValidationError(msg.format(', '.join(COUNT_METHODS), method))
    sequence = []
    for n in range(1, max_n + 1):
        if method == 'brute':
            sequence.append(edge_count_brute(n, limit, verbose))
            continue
        value = edge_count_formula(n)
        if method == 'both' and n <= brute_max:
            brute = edge_count_brute(n, limit, verbose)
            if brute != value:
                msg = 'Edge count of OFG(A_{}): brute force {} != formula {}'
                raise ConsistencyError(msg.format(2 * n, brute, value))
        sequence.append(value)
    return sequence


_BRUTE = {'vertices': vertex_count_brute,
          'edges': edge_count_brute,
          'degrees': degree_histogram_brute}

_FORMULA = {'vertices': vertex_count_formula,
            'edges': edge_count_formula,
            'degrees': degree_histogram_formula}


def count_report(n, what, method='both', limit=None, verbose=False,
                 strict=True):
    """
    Count vertices, edges or degrees of :math:`{\\rm OFG}(A_{2n})`.

    There is no degree formula for ``n = 1``; ``method='both'`` then
    falls back to brute force with a warning.

    Returns
    -------
    :class:`~obspy.core.util.attribdict.AttribDict`
        ``n``, ``what``, ``method``, ``brute`` and ``formula`` (``None``
        when not computed) and ``agree`` (``None`` unless ``method`` is
        ``both``).

    Raises
    ------
    ~pyOFG.errors.ConsistencyError
        If ``method`` is ``both``, the two counts differ and ``strict`` is
        True.
    """
    n = check_n(n)
    if what not in COUNT_TARGETS:
        msg = 'what must be one of {}, got {!r}'
        raise ValidationError(msg.format(', '.join(COUNT_TARGETS), what))
    if method not in COUNT_METHODS:
        msg = 'method must be one of {}, got {!r}'
        raise ValidationError(msg.format(', '.join(COUNT_METHODS), method))
    if what == 'degrees' and n < 2 and method == 'both':
        warnings.warn('No degree formula for OFG(A_2): brute force only')
        method = 'brute'
    report = AttribDict({'n': n, 'what': what, 'method': method,
                         'brute': None, 'formula': None, 'agree': None})
    if method in ('brute', 'both'):
        report.brute = _BRUTE[what](n, limit, verbose)
    if method in ('formula', 'both'):
        report.formula = _FORMULA[what](n)
    if method == 'both':
        report.agree = report.brute == report.formula
        if strict and not report.agree:
            msg = '{} of OFG(A_{}): brute force {} != formula {}'
            raise ConsistencyError(msg.format(what.capitalize(), 2 * n,
                                              report.brute, report.formula))
    return report

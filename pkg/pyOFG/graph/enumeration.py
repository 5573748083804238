# -*- coding: utf-8 -*-
"""
Enumeration of the valid MV assignments of the equal-angle vertex
:math:`A_{2n}`.

By Maekawa's theorem the valid assignments are exactly the bit patterns
of length :math:`2n` with :math:`n+1` mountains (majority-mountain) or
:math:`n-1` mountains (majority-valley). Each class is generated directly
by unranking combinations in colexicographic order, which for bit masks
is plain ascending integer order, instead of filtering all
:math:`2^{2n}` masks.

.. module:: enumeration

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

import sys
import warnings

import numpy as np

from ..errors import ValidationError
from ..headers import MAJORITY, MOUNTAIN, ENUMERATION_CHUNK_SIZE, \
    LARGE_N_WARNING
from ..utils import binomial, check_n
from ..vertex.assignment import MVAssignment


def rank_combination(mask):
    """
    Colexicographic rank of the set bits of ``mask``: the positions
    :math:`c_1 < c_2 < \\ldots < c_k` rank to
    :math:`\\sum_i \\binom{c_i}{i}`.

    >>> rank_combination(0b1011)
    1
    """
    mask = int(mask)
    if mask < 0:
        msg = 'Combination mask must be non-negative, got {}'
        raise ValidationError(msg.format(mask))
    rank = 0
    i = 0
    position = 0
    while mask:
        if mask & 1:
            i += 1
            rank += binomial(position, i)
        mask >>= 1
        position += 1
    return rank


def _binomial_table(size, k):
    """
    ``table[c, i] = C(c, i)`` for ``0 <= c < size`` and ``0 <= i <= k``.
    """
    table = np.zeros((size, k + 1), dtype=np.int64)
    for c in range(size):
        for i in range(k + 1):
            table[c, i] = binomial(c, i)
    return table


def unrank_combinations(ranks, size, k):
    """
    Bit masks of the ``k``-subsets of ``size`` positions with the given
    colexicographic ranks.

    Parameters
    ----------
    ranks : array-like
        Ranks in ``0 .. C(size, k) - 1``.

    size : int
        Number of bit positions, at most 64.

    k : int
        Number of set bits.

    Returns
    -------
    :class:`~numpy.ndarray`
        ``uint64`` masks; ascending ranks give ascending masks.
    """
    ranks = np.array(ranks, dtype=np.int64, ndmin=1)
    total = binomial(size, k)
    if ranks.size and (ranks.min() < 0 or ranks.max() >= total):
        msg = 'Ranks must lie in 0..{} for {} of {} positions'
        raise ValidationError(msg.format(total - 1, k, size))
    masks = np.zeros(ranks.shape, dtype=np.uint64)
    if k == 0:
        return masks
    table = _binomial_table(size, k)
    remaining = ranks.copy()
    for i in range(k, 0, -1):
        # largest c with C(c, i) <= remaining
        column = table[:, i]
        c = np.searchsorted(column, remaining, side='right') - 1
        remaining -= column[c]
        masks |= np.left_shift(np.uint64(1), c.astype(np.uint64))
    return masks


def _class_sizes(n, majority):
    if majority not in MAJORITY:
        msg = 'majority must be one of {}, got {!r}'
        raise ValidationError(msg.format(', '.join(sorted(MAJORITY)),
                                         majority))
    return [(sign, n + 1 if sign == MOUNTAIN else n - 1)
            for sign in MAJORITY[majority]]


def iter_valid_chunks(n, majority='both', chunk_size=ENUMERATION_CHUNK_SIZE):
    """
    Yield ``(sign, codes)`` where ``codes`` is an ascending ``uint64``
    array of valid assignments of majority ``sign`` (+1 or -1). Each class
    is split into chunks of at most ``chunk_size`` codes.
    """
    n = check_n(n)
    degree = 2 * n
    for sign, k in _class_sizes(n, majority):
        total = binomial(degree, k)
        for start in range(0, total, chunk_size):
            stop = min(start + chunk_size, total)
            yield sign, unrank_combinations(np.arange(start, stop), degree, k)


def enumerate_valid_codes(n, majority='both', verbose=False):
    """
    Packed codes of all valid assignments of :math:`A_{2n}` as one
    ascending ``uint64`` array. There are :math:`\\binom{2n}{n-1}` per
    Maekawa class.
    """
    n = check_n(n)
    if n > LARGE_N_WARNING:
        warnings.warn('Enumerating OFG(A_{}) vertices, this takes a while'
                      .format(2 * n))
    chunks = []
    for sign, codes in iter_valid_chunks(n, majority):
        chunks.append(codes)
        if verbose:
            print('A_{}: {} codes of majority {:+d}'.format(2 * n, codes.size,
                                                            sign))
            sys.stdout.flush()
    if not chunks:
        return np.zeros(0, dtype=np.uint64)
    return np.sort(np.concatenate(chunks))


def enumerate_valid(n, majority='both'):
    """
    All valid MV assignments of :math:`A_{2n}`.

    Parameters
    ----------
    n : int
        Half the degree, ``n >= 1``.

    majority : {'mountain', 'valley', 'both'}
        Which Maekawa class to list.

    Returns
    -------
    list of :class:`~pyOFG.vertex.assignment.MVAssignment`
        In ascending order of packed code.

    Examples
    --------
    >>> len(enumerate_valid(3, 'valley'))
    15
    >>> [str(mv) for mv in enumerate_valid(1)]
    ['VV', 'MM']
    """
    degree = 2 * check_n(n)
    return [MVAssignment(int(code), degree)
            for code in enumerate_valid_codes(n, majority)]

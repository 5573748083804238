# -*- coding: utf-8 -*-
"""
Python module with general utilities: exact integer arithmetic, rational
angle parsing, enumeration limits and vectorized bit operations on packed
MV assignments.

Bit-packing convention used throughout pyOFG: crease :math:`e_1` is the
least significant bit, a mountain (+1) is a set bit and a valley (-1) a
cleared bit.

.. module:: utils

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

import os
from fractions import Fraction
from math import gcd

import numpy as np

from ..errors import ValidationError, ConsistencyError
from ..headers import DEFAULT_MAX_N, MAX_N_ENV_VARIABLE

_POPCOUNT_TABLE = np.array([bin(i).count('1') for i in range(256)],
                           dtype=np.int64)


def binomial(n, k):
    """
    Exact binomial coefficient :math:`\\binom{n}{k}`.

    Evaluated with the multiplicative formula, reducing numerator and
    denominator by their GCD at every step so intermediate values stay
    small. Returns 0 when ``k < 0`` or ``k > n``.

    Examples
    --------
    >>> binomial(26, 12)
    9657700
    >>> binomial(4, -1)
    0
    """
    if n < 0 or k < 0 or k > n:
        return 0
    k = min(k, n - k)
    numerator, denominator = 1, 1
    for i in range(1, k + 1):
        numerator *= n - k + i
        denominator *= i
        divisor = gcd(numerator, denominator)
        numerator //= divisor
        denominator //= divisor
    if denominator != 1:
        msg = 'binomial({}, {}) left a denominator of {}'
        raise ConsistencyError(msg.format(n, k, denominator))
    return numerator


def exact_division(numerator, denominator):
    """
    Integer division that must leave no remainder.

    Raises
    ------
    ~pyOFG.errors.ConsistencyError
        If ``denominator`` does not divide ``numerator``.
    """
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        msg = '{} is not divisible by {} (remainder {})'
        raise ConsistencyError(msg.format(numerator, denominator, remainder))
    return quotient


def parse_rational(value):
    """
    Parse an angle in degrees into an exact :class:`~fractions.Fraction`.

    Accepts integers, fractions such as ``'180/7'`` and finite decimals
    such as ``'22.5'``. Floats are refused since validity logic must be
    exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        msg = 'Angles must be given as exact rationals, got {!r}'
        raise ValidationError(msg.format(value))
    if isinstance(value, int):
        return Fraction(value)
    text = str(value).strip().replace(' ', '')
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        msg = 'Could not parse angle {!r} as a rational number of degrees'
        raise ValidationError(msg.format(value))


def parse_angle_list(text):
    """
    Parse a comma separated list of angles, ignoring whitespace.

    >>> parse_angle_list(' 45, 15,60 ,85,75,80')[:2]
    [Fraction(45, 1), Fraction(15, 1)]
    """
    items = [item for item in text.replace(' ', '').split(',')]
    if not items or any(not item for item in items):
        msg = 'Malformed angle list: {!r}'
        raise ValidationError(msg.format(text))
    return [parse_rational(item) for item in items]


def get_enumeration_limit(limit=None):
    """
    Resolve the largest ``n`` brute force operations may enumerate.

    Parameters
    ----------
    limit : int or None
        Explicit limit. If ``None`` the ``OFG_MAX_N`` environment
        variable is used, falling back to
        :data:`~pyOFG.headers.DEFAULT_MAX_N`.
    """
    source = 'argument'
    if limit is None:
        limit = os.environ.get(MAX_N_ENV_VARIABLE)
        source = MAX_N_ENV_VARIABLE
    if limit is None:
        return DEFAULT_MAX_N
    try:
        limit = int(limit)
    except (TypeError, ValueError):
        msg = 'Enumeration limit from {} must be an integer, got {!r}'
        raise ValidationError(msg.format(source, limit))
    if limit < 1:
        msg = 'Enumeration limit from {} must be >= 1, got {}'
        raise ValidationError(msg.format(source, limit))
    return limit


def check_n(n, minimum=1):
    """
    Validate a half-degree ``n`` and return it as an ``int``.
    """
    if isinstance(n, bool) or int(n) != n or n < minimum:
        msg = 'n must be an integer >= {}, got {!r}'
        raise ValidationError(msg.format(minimum, n))
    return int(n)


def full_mask(degree):
    """
    Mask with the lowest ``degree`` bits set.
    """
    return (1 << degree) - 1


def face_mask(k, degree):
    """
    Bits of the two creases bordering the 1-based face ``k``: face
    :math:`\\alpha_k` lies between :math:`e_k` and :math:`e_{k+1}`
    (cyclically, so :math:`\\alpha_{2n}` borders :math:`e_{2n}` and
    :math:`e_1`).
    """
    return (1 << (k - 1)) | (1 << (k % degree))


def popcount(codes):
    """
    Number of set bits of every element of an integer array.

    Parameters
    ----------
    codes : array-like
        Non-negative integers below :math:`2^{64}`.

    Returns
    -------
    :class:`~numpy.ndarray`
        ``int64`` array of the same shape.
    """
    codes = np.ascontiguousarray(codes, dtype=np.uint64)
    shape = codes.shape
    codes = codes.reshape(-1)
    counts = _POPCOUNT_TABLE[codes.view(np.uint8)].reshape(-1, 8).sum(axis=1)
    return counts.reshape(shape)


def rotate_bits(codes, r, degree):
    """
    Cyclically rotate packed assignments so that crease :math:`e_i`
    moves to :math:`e_{i+r}`.

    Works on Python integers and on ``uint64`` numpy arrays.
    """
    r %= degree
    if r == 0:
        return codes
    if isinstance(codes, (int, np.integer)) and not isinstance(codes, bool):
        codes = int(codes)
        return ((codes << r) | (codes >> (degree - r))) & full_mask(degree)
    codes = np.asarray(codes, dtype=np.uint64)
    mask = np.uint64(full_mask(degree))
    left = np.left_shift(codes, np.uint64(r)) & mask
    right = np.right_shift(codes, np.uint64(degree - r))
    return left | right


def reflect_bits(codes, r, degree):
    """
    Reflect packed assignments so that crease :math:`e_i` moves to
    :math:`e_{r-i}` (1-based, cyclic).
    """
    scalar = isinstance(codes, (int, np.integer))
    if scalar:
        codes = int(codes)
        result = 0
        for i in range(degree):
            if codes >> i & 1:
                result |= 1 << ((r - i - 2) % degree)
        return result
    codes = np.asarray(codes, dtype=np.uint64)
    result = np.zeros_like(codes)
    one = np.uint64(1)
    for i in range(degree):
        bit = np.right_shift(codes, np.uint64(i)) & one
        result |= np.left_shift(bit, np.uint64((r - i - 2) % degree))
    return result

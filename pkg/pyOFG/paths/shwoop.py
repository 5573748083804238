# -*- coding: utf-8 -*-
"""
Crease-by-crease path finding with shwoops.

Walk the creases :math:`e_1, \\ldots, e_{2n-1}` in order. When the
working assignment :math:`\\eta` disagrees with the target on
:math:`e_i`, flip :math:`\\alpha_i` if it is flippable. Otherwise scan
forward for the first flippable face :math:`\\alpha_j` and flip
:math:`\\alpha_j, \\alpha_{j-1}, \\ldots, \\alpha_i` (the *shwoop*); each
flip unblocks the next one. After the walk the last crease agrees
automatically, so :math:`\\alpha_{2n}` is never flipped.

.. module:: shwoop

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

from ..errors import ConsistencyError
from ..vertex.assignment import flip_face, is_flippable
from .flip_path import FlipPath
from .halves import _check_pair


def fea_shwoop(mu, nu):
    """
    Flip path from ``mu`` to ``nu`` that never uses face
    :math:`\\alpha_{2n}`. Runs in :math:`O(n^2)`.

    Parameters
    ----------
    mu, nu : :class:`~pyOFG.vertex.assignment.MVAssignment`
        Valid assignments of :math:`A_{2n}`.

    Returns
    -------
    :class:`~pyOFG.paths.flip_path.FlipPath`

    Raises
    ------
    ~pyOFG.errors.ValidationError
        For invalid or mismatched inputs.

    ~pyOFG.errors.ConsistencyError
        If the forward scan runs past :math:`\\alpha_{2n-1}` or a shwoop
        flip is blocked.

    Examples
    --------
    >>> from pyOFG.vertex.assignment import MVAssignment as A
    >>> fea_shwoop(A.from_string('MMVVMM'), A.from_string('MMMVVM')).faces
    (4, 3)
    """
    _check_pair(mu, nu)
    degree = mu.degree
    eta = mu
    faces = []
    for i in range(1, degree):
        if eta.crease(i) == nu.crease(i):
            continue
        cursor = i
        while not is_flippable(eta, cursor):
            cursor += 1
            if cursor > degree - 1:
                msg = ('No flippable face among faces {}..{} of {} while '
                       'fixing crease {} towards {}')
                raise ConsistencyError(msg.format(i, degree - 1, eta, i, nu))
        for k in range(cursor, i - 1, -1):
            if not is_flippable(eta, k):
                msg = 'Shwoop blocked at face {} of {} (started at face {})'
                raise ConsistencyError(msg.format(k, eta, cursor))
            eta = flip_face(eta, k)
            faces.append(k)
    if eta != nu:
        msg = 'Shwoop walk ended at {} instead of {}'
        raise ConsistencyError(msg.format(eta, nu))
    return FlipPath(faces, mu, nu)

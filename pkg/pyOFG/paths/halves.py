# -*- coding: utf-8 -*-
"""
Path finding through the smaller of the two face "halves".

:math:`B(\\mu, \\nu)` and its complement are the two sets of faces whose
boundary is the disagreement set :math:`S(\\mu, \\nu)`, so flipping every
face of either one, once, turns :math:`\\mu` into :math:`\\nu`. One of
them has at most :math:`n` faces. Some face of the chosen set is always
flippable under the working assignment, and removing it leaves a set
whose boundary is again the remaining disagreement set; repeating gives a
path of at most :math:`n` flips, hence the diameter bound.

.. module:: halves

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

from ..errors import ValidationError, ConsistencyError
from ..vertex.assignment import flip_face, is_flippable, is_valid_uniform
from ..vertex.sets import between_faces
from .flip_path import FlipPath


def _check_pair(mu, nu):
    if mu.degree != nu.degree:
        msg = 'Assignments of different degree: {} ({}) and {} ({})'
        raise ValidationError(msg.format(mu, mu.degree, nu, nu.degree))
    for mv in (mu, nu):
        if not is_valid_uniform(mv):
            msg = '{} is not a valid assignment of A_{}'
            raise ValidationError(msg.format(mv, mv.degree))


def halves_face_set(mu, nu):
    """
    The face set the halves walk consumes: :math:`B(\\mu, \\nu)` if it has
    at most :math:`n` faces, its complement otherwise.
    """
    faces = between_faces(mu, nu)
    if len(faces) > mu.n:
        faces = faces.complement()
    return faces


def fea_halves(mu, nu):
    """
    Flip path from ``mu`` to ``nu`` using every face of
    :func:`halves_face_set` exactly once, hence at most :math:`n` flips.
    At each step the flippable face of smallest index is taken. Runs in
    :math:`O(n^2)`.

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
        If no face of the remaining set is flippable.

    Examples
    --------
    >>> from pyOFG.vertex.assignment import MVAssignment as A
    >>> fea_halves(A.from_string('MMMV'), A.from_string('VVVM')).faces
    (1, 3)
    """
    _check_pair(mu, nu)
    remaining = sorted(halves_face_set(mu, nu))
    eta = mu
    faces = []
    while remaining:
        for k in remaining:
            if is_flippable(eta, k):
                break
        else:
            msg = ('None of the faces {} is flippable under {} on the way '
                   'from {} to {}')
            raise ConsistencyError(msg.format(remaining, eta, mu, nu))
        eta = flip_face(eta, k)
        faces.append(k)
        remaining.remove(k)
    if eta != nu:
        msg = 'Halves walk ended at {} instead of {}'
        raise ConsistencyError(msg.format(eta, nu))
    return FlipPath(faces, mu, nu)

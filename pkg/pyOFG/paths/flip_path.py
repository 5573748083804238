# -*- coding: utf-8 -*-
"""
Sequences of face flips between two MV assignments of :math:`A_{2n}`.

.. module:: flip_path

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

from ..errors import ValidationError
from ..vertex.assignment import (flip_face, is_valid_uniform,
                                 maekawa_sum)


class FlipPath(object):
    """
    An ordered list of faces whose flips, applied one after the other,
    lead from :attr:`start` to :attr:`end`.

    Parameters
    ----------
    faces : sequence of int
        1-based face indices in flipping order.

    start, end : :class:`~pyOFG.vertex.assignment.MVAssignment`
        End points of the path.
    """
    def __init__(self, faces, start, end):
        if start.degree != end.degree:
            msg = 'Path end points of different degree: {} and {}'
            raise ValidationError(msg.format(start, end))
        self.faces = tuple(int(k) for k in faces)
        self.start = start
        self.end = end

    @property
    def degree(self):
        return self.start.degree

    def replay(self):
        """
        Yield the assignments visited, starting with :attr:`start`.
        """
        current = self.start
        yield current
        for k in self.faces:
            current = flip_face(current, k)
            yield current

    def __len__(self):
        return len(self.faces)

    def __iter__(self):
        return iter(self.faces)

    def __eq__(self, other):
        if not isinstance(other, FlipPath):
            return NotImplemented
        return (self.faces, self.start, self.end) == \
            (other.faces, other.start, other.end)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __repr__(self):
        return 'FlipPath({}, start={!r}, end={!r})'.format(
            list(self.faces), str(self.start), str(self.end))


def first_failure(path):
    """
    Describe the first step at which ``path`` goes wrong, or return
    ``None`` for a good path.
    """
    degree = path.degree
    current = path.start
    if not is_valid_uniform(current):
        return 'step 0: start {} is invalid (M - V = {})'.format(
            current, maekawa_sum(current))
    for step, k in enumerate(path.faces, 1):
        if not 1 <= k <= degree:
            return 'step {}: face {} is outside 1..{}'.format(step, k, degree)
        current = flip_face(current, k)
        if not is_valid_uniform(current):
            return 'step {}: flipping face {} gives invalid {} ' \
                   '(M - V = {})'.format(step, k, current,
                                         maekawa_sum(current))
    if current != path.end:
        return 'end: replay stops at {}, expected {}'.format(current,
                                                            path.end)
    return None


def verify_path(path, diagnostic=False):
    """
    Check that replaying ``path`` from its start visits only valid
    assignments and stops at its end.

    Parameters
    ----------
    path : :class:`FlipPath`

    diagnostic : bool
        If True return ``(ok, message)`` where ``message`` describes the
        first failing step (``None`` when ``ok``).

    Examples
    --------
    >>> from pyOFG.vertex.assignment import MVAssignment as A
    >>> mv = A.from_string('MMVVMM')
    >>> verify_path(FlipPath([3], mv, flip_face(mv, 3)))
    False
    """
    message = first_failure(path)
    if diagnostic:
        return message is None, message
    return message is None

# -*- coding: utf-8 -*-
"""
Sets of creases and faces of a degree-:math:`2n` vertex, and the two sets
the path algorithms are built on:

- :func:`diff_set`, the creases :math:`S(\\mu, \\nu)` on which two
  assignments disagree, and
- :func:`between_faces`, the faces :math:`B(\\mu, \\nu)` lying between
  consecutive pairs of those creases.

Flipping every face of a set :math:`F` negates exactly the creases with
one neighbouring face in :math:`F`; :math:`B(\\mu, \\nu)` and its
complement are the two face sets whose boundary is :math:`S(\\mu, \\nu)`.

.. module:: sets

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
from ..utils import face_mask


class _IndexSet(object):
    """
    Immutable set of 1-based indices in ``1..degree``.
    """
    __slots__ = ('_members', '_degree')
    _kind = 'index'

    def __init__(self, members, degree):
        degree = int(degree)
        members = frozenset(int(member) for member in members)
        bad = sorted(member for member in members
                     if not 1 <= member <= degree)
        if bad:
            msg = '{} indices must be in 1..{}, got {}'
            raise ValidationError(msg.format(self._kind.capitalize(),
                                             degree, bad))
        object.__setattr__(self, '_members', members)
        object.__setattr__(self, '_degree', degree)

    def __setattr__(self, name, value):
        raise AttributeError('{} is immutable'.format(type(self).__name__))

    @classmethod
    def from_bitmask(cls, bitmask, degree):
        return cls([i + 1 for i in range(degree) if bitmask >> i & 1],
                   degree)

    @property
    def members(self):
        return self._members

    @property
    def degree(self):
        return self._degree

    @property
    def bitmask(self):
        mask = 0
        for member in self._members:
            mask |= 1 << (member - 1)
        return mask

    def complement(self):
        """
        The indices of ``1..degree`` not in this set.
        """
        return type(self)(set(range(1, self._degree + 1)) - self._members,
                          self._degree)

    def __contains__(self, index):
        return index in self._members

    def __iter__(self):
        return iter(sorted(self._members))

    def __len__(self):
        return len(self._members)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return (self._members == other._members and
                self._degree == other._degree)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((type(self).__name__, self._members, self._degree))

    def __repr__(self):
        return '{}({}, degree={})'.format(type(self).__name__,
                                          sorted(self._members),
                                          self._degree)


class CreaseSet(_IndexSet):
    """
    A set of creases :math:`e_i`.
    """
    __slots__ = ()
    _kind = 'crease'


class FaceSet(_IndexSet):
    """
    A set of faces :math:`\\alpha_k`.
    """
    __slots__ = ()
    _kind = 'face'


def _check_lengths(mu, nu):
    if mu.degree != nu.degree:
        msg = 'Assignments of different degree: {} ({}) and {} ({})'
        raise ValidationError(msg.format(mu, mu.degree, nu, nu.degree))


def diff_set(mu, nu):
    """
    The creases :math:`S(\\mu, \\nu)` where ``mu`` and ``nu`` disagree.

    >>> from pyOFG.vertex.assignment import MVAssignment as A
    >>> sorted(diff_set(A.from_string('MMVVMM'), A.from_string('MMMVVM')))
    [3, 5]
    """
    _check_lengths(mu, nu)
    return CreaseSet.from_bitmask(mu.code ^ nu.code, mu.degree)


def between_faces(mu, nu):
    """
    The faces :math:`B(\\mu, \\nu)`.

    With :math:`S(\\mu, \\nu) = \\{e_{i_1}, \\ldots, e_{i_{2k}}\\}`,
    :math:`i_1 < \\cdots < i_{2k}`, this is the union of the runs
    :math:`\\{\\alpha_{i_{2j-1}}, \\ldots, \\alpha_{i_{2j}-1}\\}`. Its
    complement (:meth:`FaceSet.complement`) is the union of the remaining
    runs, wrapping from :math:`e_{i_{2k}}` back to :math:`e_{i_1}`.

    Raises
    ------
    ~pyOFG.errors.ValidationError
        If :math:`|S(\\mu, \\nu)|` is odd, which cannot happen for two
        valid assignments of :math:`A_{2n}`.
    """
    creases = sorted(diff_set(mu, nu))
    if len(creases) % 2:
        msg = ('|S({}, {})| = {} is odd; both assignments must be valid '
               '(Maekawa) for the faces between them to exist')
        raise ValidationError(msg.format(mu, nu, len(creases)))
    faces = []
    for start, stop in zip(creases[0::2], creases[1::2]):
        faces.extend(range(start, stop))
    return FaceSet(faces, mu.degree)


def boundary(faces):
    """
    Creases bordered by exactly one face of ``faces``: the creases
    negated when every face of the set is flipped once.
    """
    degree = faces.degree
    mask = 0
    for k in faces:
        mask ^= face_mask(k, degree)
    return CreaseSet.from_bitmask(mask, degree)

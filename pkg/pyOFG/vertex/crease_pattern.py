# -*- coding: utf-8 -*-
"""
Single-vertex crease patterns with exact rational sector angles.

.. module:: crease_pattern

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

from ..errors import ValidationError
from ..headers import FULL_TURN
from ..utils import parse_rational, parse_angle_list, check_n


class CreasePattern(object):
    """
    A flat-foldable single vertex of even degree :math:`2n`.

    ``angles[i]`` is the sector angle (degrees) of face
    :math:`\\alpha_{i+1}`, between creases :math:`e_{i+1}` and
    :math:`e_{i+2}`; the last angle closes the cycle back to
    :math:`e_1`.

    Parameters
    ----------
    angles : sequence
        Sector angles as ints, :class:`~fractions.Fraction` or strings
        such as ``'180/7'``. Floats are refused.

    Raises
    ------
    ~pyOFG.errors.ValidationError
        If the degree is odd or < 2, an angle is not positive, the angles
        do not add to 360 degrees or their alternating sum is non-zero
        (Kawasaki).

    Examples
    --------
    >>> c = CreasePattern([45, 15, 60, 85, 75, 80])
    >>> c.degree, c.uniform
    (6, False)
    """
    __slots__ = ('_angles',)

    def __init__(self, angles):
        angles = tuple(parse_rational(angle) for angle in angles)
        degree = len(angles)
        if degree < 2 or degree % 2:
            msg = 'A flat vertex needs an even degree >= 2, got {} angles'
            raise ValidationError(msg.format(degree))
        if any(angle <= 0 for angle in angles):
            msg = 'Sector angles must be positive, got {}'
            raise ValidationError(msg.format(_format_angles(angles)))
        total = sum(angles)
        if total != FULL_TURN:
            msg = 'Sector angles must add to 360 degrees, got {} ({})'
            raise ValidationError(msg.format(_format_angle(total),
                                             _format_angles(angles)))
        alternating = sum(angles[0::2]) - sum(angles[1::2])
        if alternating != 0:
            msg = ('Kawasaki condition fails: alternating angle sum is {} '
                   'for {}')
            raise ValidationError(msg.format(_format_angle(alternating),
                                             _format_angles(angles)))
        object.__setattr__(self, '_angles', angles)

    def __setattr__(self, name, value):
        raise AttributeError('CreasePattern is immutable')

    @classmethod
    def from_string(cls, text):
        """
        Parse a comma separated angle list such as ``'45,15,60,85,75,80'``.
        """
        return cls(parse_angle_list(text))

    @property
    def angles(self):
        return self._angles

    @property
    def degree(self):
        return len(self._angles)

    @property
    def n(self):
        return len(self._angles) // 2

    @property
    def uniform(self):
        """
        True for the equal-angle vertex :math:`A_{2n}`.
        """
        return all(angle == self._angles[0] for angle in self._angles)

    def angle(self, k):
        """
        Sector angle of the 1-based face ``k``.
        """
        if not 1 <= k <= self.degree:
            msg = 'Face index must be in 1..{}, got {!r}'
            raise ValidationError(msg.format(self.degree, k))
        return self._angles[k - 1]

    def __eq__(self, other):
        if not isinstance(other, CreasePattern):
            return NotImplemented
        return self._angles == other._angles

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self._angles)

    def __str__(self):
        return _format_angles(self._angles)

    def __repr__(self):
        return "CreasePattern('{}')".format(self)


def uniform_pattern(n):
    """
    The equal-angle vertex :math:`A_{2n}`, every angle :math:`180/n`
    degrees.
    """
    n = check_n(n)
    return CreasePattern([Fraction(180, n)] * (2 * n))


def _format_angle(angle):
    return str(angle)


def _format_angles(angles):
    return ','.join(_format_angle(angle) for angle in angles)

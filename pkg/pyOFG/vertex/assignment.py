# -*- coding: utf-8 -*-
"""
Mountain-valley (MV) assignments of a single degree-:math:`2n` vertex and
the face flips acting on them.

An assignment :math:`\\mu` labels the creases :math:`e_1, \\ldots,
e_{2n}` with +1 (mountain, ``M``) or -1 (valley, ``V``). Face
:math:`\\alpha_k` lies between :math:`e_k` and :math:`e_{k+1}` (indices
cyclic) and flipping it negates exactly those two creases. Creases and
faces are 1-based in every public function.

.. module:: assignment

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
from ..headers import MOUNTAIN, VALLEY, MV_CHARACTERS, MV_VALUES
from ..utils import full_mask, face_mask, rotate_bits, reflect_bits


class MVAssignment(object):
    """
    An immutable, bit-packed MV assignment.

    Crease :math:`e_1` is the least significant bit of :attr:`code`; a
    set bit is a mountain.

    Parameters
    ----------
    code : int
        Packed assignment, ``0 <= code < 2**degree``.

    degree : int
        Number of creases :math:`2n`, even and >= 2.

    Examples
    --------
    >>> mv = MVAssignment.from_string('MMMV')
    >>> mv.code, mv.degree
    (7, 4)
    >>> str(mv)
    'MMMV'
    """
    __slots__ = ('_code', '_degree')

    def __init__(self, code, degree):
        degree = int(degree)
        if degree < 2 or degree % 2:
            msg = 'Degree must be even and >= 2, got {}'
            raise ValidationError(msg.format(degree))
        code = int(code)
        if not 0 <= code <= full_mask(degree):
            msg = 'Code {} does not fit in {} creases'
            raise ValidationError(msg.format(code, degree))
        object.__setattr__(self, '_code', code)
        object.__setattr__(self, '_degree', degree)

    def __setattr__(self, name, value):
        raise AttributeError('MVAssignment is immutable')

    @classmethod
    def from_string(cls, text):
        """
        Build an assignment from a string over ``{M, V}``, crease
        :math:`e_1` first.
        """
        text = str(text).strip()
        if not text or any(char not in MV_VALUES for char in text):
            msg = "MV string must match ^[MV]+$, got {!r}"
            raise ValidationError(msg.format(text))
        if len(text) % 2:
            msg = 'MV string must have even length, got {!r} ({} creases)'
            raise ValidationError(msg.format(text, len(text)))
        code = 0
        for i, char in enumerate(text):
            if char == 'M':
                code |= 1 << i
        return cls(code, len(text))

    @classmethod
    def from_values(cls, values):
        """
        Build an assignment from a sequence of +1/-1 values.
        """
        values = list(values)
        code = 0
        for i, value in enumerate(values):
            if value == MOUNTAIN:
                code |= 1 << i
            elif value != VALLEY:
                msg = 'MV values must be +1 or -1, got {!r} at crease {}'
                raise ValidationError(msg.format(value, i + 1))
        return cls(code, len(values))

    @property
    def code(self):
        return self._code

    @property
    def degree(self):
        return self._degree

    @property
    def n(self):
        return self._degree // 2

    @property
    def values(self):
        """
        Tuple of +1/-1 values, ``values[i]`` is :math:`\\mu(e_{i+1})`.
        """
        return tuple(MOUNTAIN if self._code >> i & 1 else VALLEY
                     for i in range(self._degree))

    def crease(self, i):
        """
        :math:`\\mu(e_i)` for a 1-based crease index ``i``.
        """
        _check_index(i, self._degree, 'crease')
        return MOUNTAIN if self._code >> (i - 1) & 1 else VALLEY

    @property
    def mountains(self):
        return bin(self._code).count('1')

    @property
    def valleys(self):
        return self._degree - self.mountains

    def __len__(self):
        return self._degree

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        if not isinstance(other, MVAssignment):
            return NotImplemented
        return self._code == other._code and self._degree == other._degree

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __lt__(self, other):
        return (self._degree, self._code) < (other._degree, other._code)

    def __hash__(self):
        return hash((self._code, self._degree))

    def __str__(self):
        return ''.join(MV_CHARACTERS[value] for value in self.values)

    def __repr__(self):
        return "MVAssignment('{}')".format(self)


def _check_index(k, degree, what='face'):
    if isinstance(k, bool) or int(k) != k or not 1 <= k <= degree:
        msg = '{} index must be in 1..{}, got {!r}'
        raise ValidationError(msg.format(what.capitalize(), degree, k))


def as_assignment(mv):
    """
    Accept an :class:`MVAssignment` or an MV string.
    """
    if isinstance(mv, MVAssignment):
        return mv
    return MVAssignment.from_string(mv)


def maekawa_sum(mv):
    """
    :math:`\\sum_i \\mu(e_i)`, i.e. mountains minus valleys.

    >>> maekawa_sum(MVAssignment.from_string('MMVVMM'))
    2
    """
    return 2 * mv.mountains - mv.degree


def majority(mv):
    """
    Sign of the Maekawa sum: +1 for majority-mountain, -1 for
    majority-valley, 0 when balanced.
    """
    total = maekawa_sum(mv)
    return (total > 0) - (total < 0)


def is_valid_uniform(mv, pattern=None):
    """
    Validity on the equal-angle vertex :math:`A_{2n}`: valid if and only
    if the Maekawa sum is :math:`\\pm 2`.

    Parameters
    ----------
    mv : :class:`MVAssignment`
        The assignment to test.

    pattern : :class:`~pyOFG.vertex.crease_pattern.CreasePattern`, optional
        If given, it must be uniform with matching degree. Non-uniform
        patterns need :func:`~pyOFG.vertex.general.is_valid_general`.

    Raises
    ------
    ~pyOFG.errors.ValidationError
        For a non-uniform or mismatched pattern.
    """
    if pattern is not None:
        if not pattern.uniform:
            msg = ('is_valid_uniform called for the non-uniform pattern {}; '
                   'use is_valid_general')
            raise ValidationError(msg.format(pattern))
        if pattern.degree != mv.degree:
            msg = 'Assignment of degree {} on a pattern of degree {}'
            raise ValidationError(msg.format(mv.degree, pattern.degree))
    return abs(maekawa_sum(mv)) == 2


def _require_valid(mv):
    if not is_valid_uniform(mv):
        msg = '{} is not a valid assignment of A_{} (M - V = {})'
        raise ValidationError(msg.format(mv, mv.degree, maekawa_sum(mv)))


def is_flippable(mv, k):
    """
    Whether face :math:`\\alpha_k` can be flipped under the valid
    assignment ``mv`` of :math:`A_{2n}`.

    A face is blocked exactly when both of its creases carry the same
    label and that label is the minority one.

    Raises
    ------
    ~pyOFG.errors.ValidationError
        If ``mv`` is not valid or ``k`` is out of range.
    """
    _require_valid(mv)
    _check_index(k, mv.degree)
    first = mv.crease(k)
    second = mv.crease(k % mv.degree + 1)
    return not (first == second and first != majority(mv))


def flip_face(mv, k):
    """
    Negate the two creases bordering face :math:`\\alpha_k`.

    Defined for every assignment; the result may be invalid.

    >>> str(flip_face(MVAssignment.from_string('MMMV'), 4))
    'VMMM'
    """
    _check_index(k, mv.degree)
    return MVAssignment(mv.code ^ face_mask(k, mv.degree), mv.degree)


def complement(mv):
    """
    Swap every mountain and valley.
    """
    return MVAssignment(mv.code ^ full_mask(mv.degree), mv.degree)


def rotate(mv, r):
    """
    Rotate so that the label of :math:`e_i` moves to :math:`e_{i+r}`.
    """
    return MVAssignment(rotate_bits(mv.code, r, mv.degree), mv.degree)


def reflect(mv, r=0):
    """
    Reflect so that the label of :math:`e_i` moves to :math:`e_{r-i}`
    (cyclic, 1-based).
    """
    return MVAssignment(reflect_bits(mv.code, r, mv.degree), mv.degree)


def flippable_faces(mv):
    """
    All faces flippable under the valid assignment ``mv``, ascending.
    """
    return [k for k in range(1, mv.degree + 1) if is_flippable(mv, k)]


def uniform_degree(mv):
    """
    Degree of ``mv`` as a vertex of the flip graph of :math:`A_{2n}`.
    """
    return len(flippable_faces(mv))

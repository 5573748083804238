# -*- coding: utf-8 -*-
"""
Validity of MV assignments on arbitrary flat-foldable single vertices.

The check reduces the vertex by crimps. At every stage take a maximal
(cyclic) run of ``k`` equal sector angles of the current minimum value;
the angles on either side of the run are strictly larger. The ``k + 1``
creases bounding the run must satisfy

- mountains minus valleys ``== 0`` if ``k`` is odd; the whole run is
  crimped away and the two flanking angles ``A``, ``B`` merge into one
  angle ``A + B - alpha``;
- mountains minus valleys ``== +-1`` if ``k`` is even; the run collapses
  into a single residual crease carrying the majority label, between the
  untouched angles ``A`` and ``B``.

When every remaining angle is equal the vertex is an equal-angle cone and
the assignment is valid if and only if mountains minus valleys is
``+-2``. Which run is consumed depends on the angles only, so the
sequence of runs is computed once per pattern (:func:`crimp_plan`) and
applied either to a single assignment or, vectorized with numpy, to every
candidate assignment at once.

.. module:: general

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

from collections import namedtuple
import sys

import numpy as np

from ..errors import ValidationError, ConsistencyError, EnumerationLimitError
from ..headers import DEFAULT_MAX_GENERAL_DEGREE
from ..utils import popcount
from .assignment import MVAssignment

CrimpStep = namedtuple('CrimpStep', ['slots', 'odd', 'residual', 'angle'])
CrimpStep.__doc__ = """
One run consumed by the reduction.

``slots`` are the crease slots bounding the run (original creases are
slots ``0 .. 2n-1``, residual creases get new slot numbers), ``odd`` is
True when the run has an odd number of angles, ``residual`` is the slot
created for an even run (``None`` otherwise) and ``angle`` the repeated
minimal angle.
"""

CrimpPlan = namedtuple('CrimpPlan', ['degree', 'steps', 'final_slots'])


def crimp_plan(pattern):
    """
    Compute the crimp reduction of ``pattern``.

    Parameters
    ----------
    pattern : :class:`~pyOFG.vertex.crease_pattern.CreasePattern`

    Returns
    -------
    CrimpPlan
        ``steps`` (a list of :data:`CrimpStep`) and ``final_slots``, the
        creases of the equal-angle cone left at the end.
    """
    angles = list(pattern.angles)
    # creases[j] lies between angles[j - 1] and angles[j]
    creases = list(range(pattern.degree))
    next_slot = pattern.degree
    steps = []
    while True:
        smallest = min(angles)
        if all(angle == smallest for angle in angles):
            break
        m = len(angles)
        start = next(j for j in range(m)
                     if angles[j] == smallest and angles[j - 1] != smallest)
        k = 1
        while angles[(start + k) % m] == smallest:
            k += 1
        if k + 2 > m:
            msg = 'Run of {} angles leaves no flanking angles in {}'
            raise ConsistencyError(msg.format(k, angles))
        # rotate so that the left flanking angle sits at index 0
        t = start - 1
        angles = angles[t:] + angles[:t]
        creases = creases[t:] + creases[:t]
        left, right = angles[0], angles[k + 1]
        run = creases[1:k + 2]
        if k % 2:
            steps.append(CrimpStep(tuple(run), True, None, smallest))
            angles = [left + right - smallest] + angles[k + 2:]
            creases = [creases[0]] + creases[k + 2:]
        else:
            steps.append(CrimpStep(tuple(run), False, next_slot, smallest))
            angles = [left, right] + angles[k + 2:]
            creases = [creases[0], next_slot] + creases[k + 2:]
            next_slot += 1
    return CrimpPlan(pattern.degree, steps, tuple(creases))


def _apply_plan(plan, parities):
    """
    Run ``plan`` on a list of per-crease parity arrays (+1/-1). Returns a
    boolean array of validity.
    """
    parities = list(parities)
    valid = np.ones(np.shape(parities[0]), dtype=bool)
    for step in plan.steps:
        total = sum(parities[slot] for slot in step.slots)
        if step.odd:
            valid &= total == 0
        else:
            valid &= np.abs(total) == 1
            parities.append(np.sign(total))
    total = sum(parities[slot] for slot in plan.final_slots)
    valid &= np.abs(total) == 2
    return valid


def _parities(codes, degree):
    codes = np.asarray(codes, dtype=np.uint64)
    one = np.uint64(1)
    return [(np.right_shift(codes, np.uint64(i)) & one).astype(np.int64) * 2
            - 1 for i in range(degree)]


def is_valid_general(pattern, mv, plan=None):
    """
    Whether ``mv`` folds the single vertex ``pattern`` flat.

    On an equal-angle pattern this coincides with
    :func:`~pyOFG.vertex.assignment.is_valid_uniform`.

    Parameters
    ----------
    pattern : :class:`~pyOFG.vertex.crease_pattern.CreasePattern`
        Validated on construction (angle sum and Kawasaki).

    mv : :class:`~pyOFG.vertex.assignment.MVAssignment`

    plan : CrimpPlan, optional
        Reuse a plan from :func:`crimp_plan` when testing many
        assignments.

    Examples
    --------
    >>> from pyOFG.vertex.crease_pattern import CreasePattern
    >>> c = CreasePattern([45, 15, 60, 85, 75, 80])
    >>> is_valid_general(c, MVAssignment.from_string('MMVMVM'))
    True
    """
    _check_degree(pattern, mv)
    if plan is None:
        plan = crimp_plan(pattern)
    return bool(_apply_plan(plan, list(mv.values)))


def valid_mask_general(pattern, codes, plan=None):
    """
    Vectorized :func:`is_valid_general` over an array of packed codes.
    """
    if plan is None:
        plan = crimp_plan(pattern)
    codes = np.asarray(codes, dtype=np.uint64)
    if codes.size == 0:
        return np.zeros(0, dtype=bool)
    return _apply_plan(plan, _parities(codes, pattern.degree))


def crimp_trace(pattern, mv):
    """
    Human readable account of the reduction of ``mv`` on ``pattern``.

    Returns
    -------
    list of str
        One line per consumed run plus a final line, stopping at the
        first failing step.
    """
    _check_degree(pattern, mv)
    plan = crimp_plan(pattern)
    parities = list(mv.values)
    names = ['e{}'.format(i + 1) for i in range(pattern.degree)]
    lines = []
    for step in plan.steps:
        total = sum(parities[slot] for slot in step.slots)
        creases = ','.join(names[slot] for slot in step.slots)
        k = len(step.slots) - 1
        if step.odd:
            ok = total == 0
            lines.append('crimp run of {} x {} over {}: M-V = {} ({})'.format(
                k, step.angle, creases, total, 'ok' if ok else 'blocked'))
        else:
            ok = abs(total) == 1
            parities.append((total > 0) - (total < 0))
            names.append('r{}'.format(len(names) - pattern.degree + 1))
            lines.append('collapse run of {} x {} over {} into {}: '
                         'M-V = {} ({})'.format(k, step.angle, creases,
                                                names[-1], total,
                                                'ok' if ok else 'blocked'))
        if not ok:
            return lines
    total = sum(parities[slot] for slot in plan.final_slots)
    lines.append('equal-angle cone {}: M-V = {} ({})'.format(
        ','.join(names[slot] for slot in plan.final_slots), total,
        'valid' if abs(total) == 2 else 'invalid'))
    return lines


def big_little_big_faces(pattern):
    """
    Faces whose angle is strictly smaller than both neighbouring angles.
    The two creases of such a face must carry opposite labels.
    """
    angles = pattern.angles
    m = len(angles)
    return [k + 1 for k in range(m)
            if angles[k] < angles[k - 1] and angles[k] < angles[(k + 1) % m]]


def passes_big_little_big(pattern, mv):
    """
    Necessary condition: every strict local-minimum face is bordered by
    one mountain and one valley.
    """
    _check_degree(pattern, mv)
    return all(mv.crease(k) != mv.crease(k % pattern.degree + 1)
               for k in big_little_big_faces(pattern))


def _big_little_big_mask(pattern, codes):
    codes = np.asarray(codes, dtype=np.uint64)
    keep = np.ones(codes.shape, dtype=bool)
    one = np.uint64(1)
    degree = pattern.degree
    for k in big_little_big_faces(pattern):
        first = np.right_shift(codes, np.uint64(k - 1)) & one
        second = np.right_shift(codes, np.uint64(k % degree)) & one
        keep &= first != second
    return keep


def enumerate_valid_general(pattern, max_degree=DEFAULT_MAX_GENERAL_DEGREE,
                            verbose=False):
    """
    All valid assignments of ``pattern`` as an ascending ``uint64`` array
    of packed codes.

    Every assignment is tried: candidates are filtered by Maekawa's
    theorem and then by the crimp reduction. Each accepted code is checked
    against the Big-Little-Big condition.

    Raises
    ------
    ~pyOFG.errors.EnumerationLimitError
        If the degree exceeds ``max_degree``.

    ~pyOFG.errors.ConsistencyError
        If an accepted assignment violates Big-Little-Big or Maekawa.
    """
    degree = pattern.degree
    if degree > max_degree:
        msg = ('Degree {} exceeds the general enumeration limit of {} '
               '(2^{} assignments)')
        raise EnumerationLimitError(msg.format(degree, max_degree, degree))
    n = degree // 2
    codes = np.arange(1 << degree, dtype=np.uint64)
    mountains = popcount(codes)
    codes = codes[(mountains == n + 1) | (mountains == n - 1)]
    if verbose:
        print('{} Maekawa candidates for {}'.format(codes.size, pattern))
        sys.stdout.flush()
    valid = codes[valid_mask_general(pattern, codes)]
    if not _big_little_big_mask(pattern, valid).all():
        msg = 'Crimp reduction accepted assignments violating Big-Little-Big'
        raise ConsistencyError(msg)
    if verbose:
        print('{} valid assignments'.format(valid.size))
        sys.stdout.flush()
    return valid


def _check_degree(pattern, mv):
    if pattern.degree != mv.degree:
        msg = 'Assignment {} has {} creases, pattern {} has {}'
        raise ValidationError(msg.format(mv, mv.degree, pattern,
                                         pattern.degree))

# -*- coding: utf-8 -*-
"""
Parsing routines for crease pattern and flip path documents.

Both are plain text with ``key=value`` items, any number per line, and
``#`` comments::

    # the example vertex with two 4-cycle components
    degree=6
    angles=45,15,60,85,75,80

A pattern may instead be given as ``degree=6 uniform=true`` for
:math:`A_6`. A flip path document carries ``start``, ``end`` and
``faces`` (comma separated, 1-based, possibly empty) and optionally the
``algorithm`` that produced it.

.. module:: ofg_metadata

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

from obspy.core.util import AttribDict

from .errors import ValidationError
from .vertex.assignment import MVAssignment
from .vertex.crease_pattern import CreasePattern, uniform_pattern
from .paths.flip_path import FlipPath


def _read_items(filename):
    """
    Collect the ``key=value`` items of a document into an
    :class:`~obspy.core.util.attribdict.AttribDict`.
    """
    items = AttribDict()
    try:
        with open(filename) as fh:
            lines = fh.readlines()
    except (IOError, OSError) as e:
        msg = 'Could not read {}: {}'
        raise ValidationError(msg.format(filename, e))
    for number, line in enumerate(lines, 1):
        # get rid of comments
        line = line.split('#')[0].strip()
        if not line:
            continue
        for item in line.split():
            if '=' not in item:
                msg = '{}, line {}: expected key=value, got {!r}'
                raise ValidationError(msg.format(filename, number, item))
            key, value = item.split('=', 1)
            items[key] = _decode_string_value(value)
    return items


def _write_items(items, filename, comment=None):
    lines = []
    if comment:
        lines.append('# {}'.format(comment))
    for key, value in items:
        lines.append('{}={}'.format(key, value))
    with open(filename, 'w') as fh:
        fh.write('\n'.join(lines) + '\n')


class PatternFile(AttribDict):
    """
    A container for the fields of a crease pattern document.

    Parameters
    ----------
    filename : str or :class:`~obspy.core.util.attribdict.AttribDict`
        Path (relative or absolute) of a pattern document, or already
        parsed fields.
    """
    def __init__(self, filename):
        if isinstance(filename, str):
            fields = _read_items(filename)
        else:
            fields = filename
        super(PatternFile, self).__init__(fields)

    def to_pattern(self):
        """
        Build the :class:`~pyOFG.vertex.crease_pattern.CreasePattern`,
        checking ``degree`` against the number of angles.
        """
        degree = self.get('degree')
        if self.get('uniform') is True:
            if not isinstance(degree, int) or degree < 2 or degree % 2:
                msg = 'uniform=true needs an even integer degree, got {!r}'
                raise ValidationError(msg.format(degree))
            return uniform_pattern(degree // 2)
        if 'angles' not in self:
            msg = 'Pattern document has no angles'
            raise ValidationError(msg)
        pattern = CreasePattern.from_string(str(self.angles))
        if degree is not None and degree != pattern.degree:
            msg = 'Pattern document declares degree {} but lists {} angles'
            raise ValidationError(msg.format(degree, pattern.degree))
        return pattern


class PathFile(AttribDict):
    """
    A container for the fields of a flip path document.
    """
    def __init__(self, filename):
        if isinstance(filename, str):
            fields = _read_items(filename)
        else:
            fields = filename
        super(PathFile, self).__init__(fields)

    def to_path(self):
        for key in ('start', 'end'):
            if key not in self:
                msg = 'Path document has no {}'
                raise ValidationError(msg.format(key))
        faces = str(self.get('faces', ''))
        try:
            faces = [int(k) for k in faces.split(',') if k.strip()]
        except ValueError:
            msg = 'Malformed face list {!r}'
            raise ValidationError(msg.format(self.faces))
        return FlipPath(faces, MVAssignment.from_string(self.start),
                        MVAssignment.from_string(self.end))


def read_pattern(filename):
    """
    Read a crease pattern document.

    Returns
    -------
    :class:`~pyOFG.vertex.crease_pattern.CreasePattern`
    """
    return PatternFile(filename).to_pattern()


def write_pattern(pattern, filename):
    """
    Write ``pattern`` as a document :func:`read_pattern` reads back.
    """
    items = [('degree', pattern.degree)]
    if pattern.uniform:
        items.append(('uniform', 'true'))
    else:
        items.append(('angles', str(pattern)))
    _write_items(items, filename)


def read_path(filename):
    """
    Read a flip path document.

    Returns
    -------
    :class:`~pyOFG.paths.flip_path.FlipPath`
    """
    return PathFile(filename).to_path()


def write_path(path, filename, algorithm=None):
    """
    Write ``path`` as a document :func:`read_path` reads back.
    """
    items = [('start', path.start), ('end', path.end),
             ('faces', ','.join(str(k) for k in path.faces))]
    if algorithm:
        items.append(('algorithm', algorithm))
    _write_items(items, filename)


def _decode_string_value(string_item):
    """
    Converts string representations of integers and booleans to the
    corresponding Python type.

    Decimal numbers are left as strings so angles stay exact.

    Parameters
    ----------
    string_item: str
        Value from a pattern or path document in its string
        representation.

    Returns
    -------
    int or bool or str
    """
    try:
        return int(string_item)
    except ValueError:
        pass
    if string_item.lower() in ('true', 'false'):
        return string_item.lower() == 'true'
    return string_item

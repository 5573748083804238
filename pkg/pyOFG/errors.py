# -*- coding: utf-8 -*-
"""
Exceptions raised by pyOFG.

Two families exist: :class:`ValidationError` for bad input (malformed MV
strings, patterns that do not fold flat, out of range indices, resource
guards) and :class:`ConsistencyError` for internal contradictions such as
a brute force count disagreeing with its closed form. The command line
interface maps the first to exit status 1 and the second to exit status 2.

.. module:: errors

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

from .headers import ERROR_CODES


class OFGError(Exception):
    """
    Base class of all pyOFG errors.
    """
    code = 'E_OFG'


class ValidationError(OFGError, ValueError):
    """
    Input that violates a documented precondition.
    """
    code = ERROR_CODES['validation']


class EnumerationLimitError(ValidationError):
    """
    A brute force operation was asked for an ``n`` above the enumeration
    limit.
    """
    code = ERROR_CODES['limit']


class UsageError(ValidationError):
    """
    A malformed command line. ``usage`` holds the help text of the parser
    that rejected it.
    """
    code = ERROR_CODES['usage']

    def __init__(self, message, usage=''):
        super(UsageError, self).__init__(message)
        self.usage = usage


class ConsistencyError(OFGError, RuntimeError):
    """
    Two computations that must agree did not. Always a bug.
    """
    code = ERROR_CODES['consistency']

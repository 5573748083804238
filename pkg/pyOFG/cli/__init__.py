# -*- coding: utf-8 -*-
"""
Command line scripts of pyOFG.
"""
from __future__ import absolute_import, print_function, division

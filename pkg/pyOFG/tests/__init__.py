# -*- coding: utf-8 -*-
"""
Test suite of pyOFG. Run with ``pytest --pyargs pyOFG``.
"""

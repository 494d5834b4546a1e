#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Exact q-binomial identities: polynomials, truncated series, partitions,
bijections and a sweep verifier
"""

# __all__ = ['exactpoly', 'qfunctions', 'series', 'partitions', 'identities']

version = "0.1"

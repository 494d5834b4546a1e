#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
 MODULE:       q.binomial.identities

 PURPOSE:      Exact verification of q-binomial identities proved by
               partition bijections, a sign-reversing involution and
               the q-binomial theorem. Expands q-binomials and truncated
               series, enumerates the partition sets involved and traces
               the bijections step by step.

 USAGE:        q.binomial.identities.py verify --identity new3 --m-max 2 --n-max 4
               q.binomial.identities.py expand --qbinom 4 2
               q.binomial.identities.py census --set A --m 1 --n 2
               q.binomial.identities.py trace --map phi --input "[7,5,5,4,4,4,4,2,2,2,1]"
               q.binomial.identities.py selftest --quick

 EXIT CODES:   0 everything passed, 1 a verification failed, 2 usage error
"""

from __future__ import division
from __future__ import absolute_import
from __future__ import print_function

import os
import sys

try:
    from qbinomial_identities.main import main as main_identities
except ImportError:
    # running from a source checkout
    sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), ".."))
    from qbinomial_identities.main import main as main_identities


def main():
    sys.exit(main_identities())


if __name__ == "__main__":
    main()

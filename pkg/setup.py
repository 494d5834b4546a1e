#!/usr/bin/env python
import os
import sys

from setuptools import setup, find_packages

os.chdir(os.path.dirname(sys.argv[0]) or ".")

with open("README.md", "r") as fh:
    long_description = fh.read()

setup(
    name="q.binomial.identities",
    version="0.1",
    description="Exact verification of q-binomial identities through "
    "partition bijections, an involution and truncated series",
    long_description=long_description,
    long_description_content_type="text/markdown",
    # list of valid classifiers
    # https://pypi.python.org/pypi?%3Aaction=list_classifiers
    classifiers=[
        "Development Status :: 3 - Beta",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    packages=find_packages(exclude=["tests"]),
    python_requires=">=3.8",
    install_requires=["sympy >= 1.5"],
    scripts=["q.binomial.identities/q.binomial.identities.py"],
    entry_points={
        "console_scripts": [
            "q.binomial.identities = qbinomial_identities.main:console_main"
        ]
    },
)

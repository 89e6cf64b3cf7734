#!/usr/bin/env python3
import os
from setuptools import setup, find_packages

import libgentlesurf


def read(fname):
    return open(os.path.join(os.path.dirname(__file__), fname)).read()


setup(
    name="gentlesurf",
    version=libgentlesurf.__version__,
    description="Surface models of gentle algebras and their derived categories",
    long_description=read("README.md"),
    long_description_content_type="text/markdown",
    author="Michael Ablassmeier",
    author_email="abi@grinser.de",
    license="GPL",
    keywords="gentle algebra ribbon graph derived category",
    packages=find_packages(exclude=("docs", "tests", "env", "t")),
    include_package_data=True,
    scripts=["gentlesurf"],
    install_requires=["networkx", "tqdm", "sympy"],
    extras_require={
        "dev": [],
        "docs": [],
        "testing": [],
    },
    classifiers=[],
)

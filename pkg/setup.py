# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 relaycap developers.
#
# relaycap is free software; you can redistribute it and/or modify it under
# the terms of the MIT License; see LICENSE file for more details.

"""Rates, bounds and capacities of state-dependent relay channels"""

import os

from setuptools import find_packages, setup

readme = open("README.rst").read()
history = open("CHANGES.rst").read()

tests_require = [
    "check-manifest>=0.42",
    "isort>=5.0",
    "jsonschema>=3.2",
    "pycodestyle>=2.6",
    "pydocstyle>=5.0",
    "pytest>=6.0",
    "pytest-cov>=2.10",
    "pytest-mock>=1.6.0",
]

extras_require = {
    "docs": ["Sphinx>=3.1.1"],
    "plot": ["matplotlib>=3.3"],
    "tests": tests_require,
}

extras_require["all"] = []
for name, reqs in extras_require.items():
    extras_require["all"].extend(reqs)

install_requires = [
    "click>=7.0",
    "marshmallow>=3.13,<4",
    "numpy>=1.20",
    "scipy>=1.7",
]

packages = find_packages(exclude=["tests", "tests.*"])

# Get the version string. Cannot be done with import!
g = {}
with open(os.path.join("relaycap", "version.py"), "rt") as fp:
    exec(fp.read(), g)
    version = g["__version__"]

setup(
    name="relaycap",
    version=version,
    description=__doc__,
    long_description=readme + "\n\n" + history,
    keywords="relay channel capacity conferencing state information",
    license="MIT",
    author="relaycap developers",
    packages=packages,
    zip_safe=False,
    include_package_data=True,
    package_data={"relaycap": ["jsonschemas/*.json"]},
    platforms="any",
    entry_points={
        "console_scripts": ["relaycap = relaycap.cli:relaycap"],
    },
    extras_require=extras_require,
    install_requires=install_requires,
    tests_require=tests_require,
    python_requires=">=3.7",
    classifiers=[
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3",
        "Development Status :: 4 - Beta",
    ],
)

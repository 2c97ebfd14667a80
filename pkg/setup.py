#!/usr/bin/env python
"""
Setup script for fatflats, exact dimensions of linear systems through
fat codimension 2 flats in projective space
"""

from setuptools import setup, os, find_packages
from codecs import open
import sys

MAJOR = 0
MINOR = 1
MICRO = 0
__version__ = '%d.%d.%d' % (MAJOR, MINOR, MICRO)


def read(fname):
    return open(os.path.join(os.path.dirname(__file__), fname), encoding='utf-8').read()


if sys.version_info[:2] < (3, 8):
    raise RuntimeError("Python version >= 3.8 required.")

setup(
    name="fatflats",
    version=__version__,
    packages=find_packages(exclude=['tests']),
    install_requires=[
        "numpy>=1.17",
        "sympy>=1.5",
        "pyyaml>=3.11",
        "structlog>=15.1",
        "tinydb>=4.0",
    ],
    extras_require={
        'test': ["pytest>=6.0", "hypothesis>=5.0"],
    },
    entry_points={
        'console_scripts': ['fatflats = fatflats.cli:main'],
    },
    description="Virtual and actual dimensions of fat codimension 2 flats",
    long_description=read('README.md'),
    long_description_content_type='text/markdown',
    license="BSD",
    keywords="algebraic geometry, linear systems, interpolation, " + \
                "Cremona transformations, Hilbert functions",
    include_package_data=True,
    platforms=["any"],
    package_data={
        'fatflats': ['*.yaml'],
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: BSD License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Operating System :: OS Independent",
    ],
)

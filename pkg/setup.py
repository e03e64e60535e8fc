"""Builds the optional Cython kernels; the package works without them."""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("GRAPHMEASURE_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(["src/graphmeasure/_kernels.pyx"], quiet=True)

setup(ext_modules=ext_modules)

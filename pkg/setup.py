"""Build script for the optional compiled reduction kernel.

The package works without the extension (a pure-Python kernel is selected
at import time), so a failed compile only costs speed.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("kiselman._speedups", ["src/kiselman/_speedups.pyx"])],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)

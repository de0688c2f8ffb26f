"""Build script for the optional compiled quaternion kernel.

The package is pure Python apart from one Cython extension holding the
quaternion matrix-product inner loop.  The extension is marked optional:
if no compiler (or no Cython) is available, installation still succeeds
and the package falls back to the numpy kernel at import time.
"""

from setuptools import setup
from setuptools.extension import Extension

try:
    import numpy
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "daggerlab._quatmul",
                ["src/daggerlab/_quatmul.pyx"],
                include_dirs=[numpy.get_include()],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)

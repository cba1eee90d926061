"""Build script: compiles the optional fast-kernel extension when Cython is
available.  The package works without it (pure-Python kernels are selected at
import time), so a missing compiler or Cython only costs speed."""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "lintersect._ckernels",
                sources=["src/lintersect/_ckernels.pyx"],
            )
        ],
        compiler_directives={"language_level": 3},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)

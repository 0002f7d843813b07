"""Build script: compiles the optional Cython kernel core.

The package is fully functional without the extension; `besselkzw.backend`
falls back to the pure-Python kernels when the compiled module is missing.
"""

import os

from setuptools import Extension, setup

PYX = os.path.join("src", "besselkzw", "_kernels_cy.pyx")

ext_modules = []
if os.path.exists(PYX):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "besselkzw._kernels_cy",
                    [PYX],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)

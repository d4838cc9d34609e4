"""Build script: compiles the optional exact-elimination extension.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time); set ADMZ_SKIP_CYTHON=1 to force a
pure build.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("ADMZ_SKIP_CYTHON"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("admz._gauss_cy", ["src/admz/_gauss_cy.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except Exception:
        ext_modules = []

setup(ext_modules=ext_modules)

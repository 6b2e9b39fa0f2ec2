"""Build script: compiles the Cython search kernel when Cython is present.

The package works without the extension (circumpoly._pysearch is a full
pure-Python twin selected at import time), so a failed or skipped extension
build is not fatal.
"""

import os

from setuptools import setup

PYX = "src/circumpoly/_fastsearch.pyx"

ext_modules = []
if os.path.exists(PYX):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [PYX], compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)

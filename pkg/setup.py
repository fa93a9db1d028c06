"""Build script for the optional compiled kernel extension.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time); building it just makes the hot
loops fast.  `pip install -e . --no-build-isolation` compiles it in
place when Cython and a C compiler are available.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "z4lift._ext",
                ["src/z4lift/_ext.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    print("Cython not available; installing with pure-Python kernels only", file=sys.stderr)

setup(ext_modules=ext_modules)

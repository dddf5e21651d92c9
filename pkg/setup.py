"""Build script: compiles the optional interpreter speedup extension.

The package works without the extension (a pure-Python twin is selected at
import time), so any build failure here degrades gracefully.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/minidl/interp/_speedups.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"minidl: building without compiled interpreter core ({exc})")

setup(ext_modules=ext_modules)

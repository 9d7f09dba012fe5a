"""Build script for the optional compiled edit-distance kernel.

The package works without the extension: vartani.correct falls back to the
pure-Python kernel at import time. Building the extension only needs Cython
and a C compiler; if either is missing the install proceeds without it.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """build_ext that degrades to a warning instead of failing the install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing / misconfigured
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            f"warning: compiled edit-distance kernel not built ({exc}); "
            "falling back to the pure-Python implementation",
            file=sys.stderr,
        )


try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("vartani._editdist", ["src/vartani/_editdist.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(
    ext_modules=ext_modules,
    cmdclass={"build_ext": optional_build_ext},
)

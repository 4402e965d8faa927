"""Build script for the optional compiled rasterizer kernel.

The package is fully functional without the extension (a NumPy fallback
with identical, bit-exact output is selected at import time), so the
extension is only built when Cython is available.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "gazeseq.render._raster",
                ["src/gazeseq/render/_raster.pyx"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)

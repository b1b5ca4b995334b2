"""Build script for the optional compiled kernel.

The package works without the extension (a numpy fallback is selected at
import time); building it just makes the small-matrix mod-p kernels much
faster.  If Cython or numpy are unavailable at build time the extension is
skipped silently.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "zzdecomp._kernels",
                sources=["src/zzdecomp/_kernels.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)

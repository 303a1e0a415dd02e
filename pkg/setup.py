"""Build script for the compiled kernel extension.

The package works without the extension (a pure-Python fallback is selected
at import time), so a failed compile is an environment problem, not a broken
install; remove the extension or set WEDGEOPS_NO_EXT=1 to force the fallback.
"""

import numpy as np
from Cython.Build import cythonize
from setuptools import setup
from setuptools.extension import Extension

extensions = [
    Extension(
        "wedgeops._kernels._ckern",
        ["src/wedgeops/_kernels/_ckern.pyx"],
        include_dirs=[np.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
]

setup(ext_modules=cythonize(extensions, language_level=3))

"""Build script for the optional compiled kernel extension.

The package works without the extension: ``vltextdet.kernels`` falls back to
a numpy/scipy implementation when ``vltextdet.kernels._native`` is missing.
"""

import numpy as np
from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        "vltextdet.kernels._native",
        ["src/vltextdet/kernels/_native.pyx"],
        include_dirs=[np.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        optional=True,
    )
]

setup(ext_modules=cythonize(extensions, language_level=3))

import os

import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # sdist consumers without Cython get the pure-Python backend
    cythonize = None

ext_modules = []
if cythonize is not None and not os.environ.get("HEFTY_NO_EXT"):
    ext_modules = cythonize(
        [
            Extension(
                "hefty._kernels._ckernels",
                sources=["src/hefty/_kernels/_ckernels.pyx", "src/hefty/_kernels/hk.c"],
                include_dirs=[np.get_include(), "src/hefty/_kernels"],
                extra_compile_args=["-O3"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)

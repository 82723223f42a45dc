import os

import numpy as np
from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("WALLED_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "walled._ckernels",
                    ["src/walled/_ckernels.pyx"],
                    include_dirs=[np.get_include()],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": 3},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)

from setuptools import Extension, setup

import numpy as np
from Cython.Build import cythonize

# The compiled kernel is optional: if the build fails, the package falls
# back to the pure-NumPy implementation at import time.
extensions = [
    Extension(
        "nwfe._kernels._core",
        ["src/nwfe/_kernels/_core.pyx"],
        include_dirs=[np.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        optional=True,
    )
]

setup(ext_modules=cythonize(extensions, language_level=3))

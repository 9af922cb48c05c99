import numpy
from setuptools import Extension, setup

# The compiled kernels are optional: without Cython (or a working compiler)
# the package installs anyway and falls back to the numpy lane at import.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "polynorm._speedups",
                ["src/polynorm/_speedups.pyx"],
                extra_compile_args=["-O3"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)

"""Builds the optional compiled kernel extension.

The package works without it (numpy fallback); install with
`pip install -e . --no-build-isolation` to compile the fast kernels.
"""

from setuptools import Extension, setup

try:
    import numpy
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "irisseg.kernels._fastkernels",
                ["src/irisseg/kernels/_fastkernels.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level="3",
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)

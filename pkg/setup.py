import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("RELGAME_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "relgame._kernels._speedups",
                    ["src/relgame/_kernels/_speedups.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level="3",
        )
    except ImportError:
        # No Cython: install works, the numpy fallback kernel is used.
        ext_modules = []

setup(ext_modules=ext_modules)

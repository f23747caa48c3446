"""Build hook for the optional compiled kernels.

The package is pure Python plus one Cython extension. When Cython or a C
compiler is missing the extension is skipped and hfree falls back to the
pure-Python kernels at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "hfree.kernels._fast",
                ["src/hfree/kernels/_fast.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)

import os

from setuptools import Extension, setup

# The compiled rank kernel is an accelerator only: if Cython or a C compiler
# is unavailable the package installs pure-Python and selects the fallback
# kernels at import time.  Set LEFPROP_PURE_BUILD=1 to skip the extension.
ext_modules = []
if not os.environ.get("LEFPROP_PURE_BUILD"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "lefschetz_props._core",
                    ["src/lefschetz_props/_core.pyx"],
                    optional=True,
                )
            ],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)

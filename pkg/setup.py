import sys

from setuptools import Extension, setup

# The closure kernel is optional: if Cython or a C toolchain is missing the
# package falls back to the numpy implementation selected in qe7._kernel.
ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("qe7._kernel._native", ["src/qe7/_kernel/_native.pyx"])],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover
    sys.stderr.write(f"qe7: building without the native kernel ({exc})\n")

setup(ext_modules=ext_modules)

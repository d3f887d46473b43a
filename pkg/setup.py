from setuptools import Extension, setup

# The grid-lattice engine has a Cython fast path; everything works without it
# (a numpy fallback is selected at import time), so a missing compiler or
# Cython must not break the install.
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "minklab.lattice._speedups",
                ["src/minklab/lattice/_speedups.pyx"],
            )
        ],
        language_level="3",
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)

from setuptools import setup

# The compiled kernel is optional: kumfib falls back to the pure-Python
# implementation in kumfib._kernel.pure when the extension is absent.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/kumfib/_kernel/_speedups.pyx"],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)

import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("mvgraph._speedups", ["src/mvgraph/_speedups.pyx"])],
        language_level=3,
    )
except ImportError:
    # pure-Python fallback is selected at import time
    ext_modules = []

setup(
    ext_modules=ext_modules,
    include_dirs=[numpy.get_include()],
)

"""Builds the _relsr extension directly from the C++ sources.

The CMake build remains the primary development path; this setup script
exists so `pip install -e .` works without extra build tooling.
"""

from glob import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "relsr_py._relsr",
    sorted(glob("src/*.cpp")) + ["python/relsr_module.cpp"],
    include_dirs=["include", "vendor"],
    libraries=["gmpxx", "gmp"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})

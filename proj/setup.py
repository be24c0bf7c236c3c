"""Wheel build for the lsdc package.

Compiles the C++ core together with the pybind11 bindings into the
single extension module lsdc._core; the pure-python half lives in
python/lsdc.  The CMake tree builds the same module for in-tree tests.
"""

from glob import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "lsdc._core",
    sources=sorted(glob("src/*.cpp")) + ["python/bindings.cpp"],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(
    ext_modules=[ext],
    cmdclass={"build_ext": build_ext},
)

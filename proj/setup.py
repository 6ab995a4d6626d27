import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "snfmom._snfmom",
    sources=sorted(glob.glob("src/*.cpp")) + ["bindings/module.cpp"],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(
    packages=["snfmom"],
    package_dir={"snfmom": "python/snfmom"},
    ext_modules=[ext],
    cmdclass={"build_ext": build_ext},
)

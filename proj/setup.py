from glob import glob

from pybind11.setup_helpers import ParallelCompile, Pybind11Extension, build_ext
from setuptools import setup

ParallelCompile("NPY_NUM_BUILD_JOBS", default=4).install()

ext = Pybind11Extension(
    "hfscover._core",
    sorted(glob("src/*.cpp")) + ["python/bindings.cpp"],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(
    packages=["hfscover"],
    package_dir={"hfscover": "python/hfscover"},
    ext_modules=[ext],
    cmdclass={"build_ext": build_ext},
)

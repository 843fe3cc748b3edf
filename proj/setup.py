from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

# The extension wraps only the numeric core; the experiment/CLI layer
# (and its vendored dependencies) is built by CMake, not by pip.
ext_modules = [
    Pybind11Extension(
        "wellblock._core",
        sources=[
            "src/types.cpp",
            "src/radial_flow.cpp",
            "src/well_model.cpp",
            "src/fd_grid.cpp",
            "bindings/py_module.cpp",
        ],
        include_dirs=["include"],
        cxx_std=20,
    ),
]

setup(ext_modules=ext_modules, cmdclass={"build_ext": build_ext})

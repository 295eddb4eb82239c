# Copyright 2026 The stablearn authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Builds the stablearn extension module through CMake."""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp) / ext.name
        build_dir.mkdir(parents=True, exist_ok=True)
        out_dir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        out_dir.mkdir(parents=True, exist_ok=True)
        cfg = "Debug" if self.debug else "Release"
        subprocess.run(
            [
                "cmake",
                str(source_dir),
                f"-DCMAKE_BUILD_TYPE={cfg}",
                "-DSTABLEARN_BUILD_PYTHON=ON",
                "-DSTABLEARN_BUILD_TESTS=OFF",
                f"-DPython3_EXECUTABLE={sys.executable}",
                f"-DSTABLEARN_PY_OUTPUT_DIR={out_dir}",
            ],
            cwd=build_dir,
            check=True,
        )
        jobs = str(os.cpu_count() or 1)
        subprocess.run(
            ["cmake", "--build", ".", "--target", "stablearn_py", "-j", jobs],
            cwd=build_dir,
            check=True,
        )


setup(
    ext_modules=[CMakeExtension("stablearn")],
    cmdclass={"build_ext": CMakeBuild},
)

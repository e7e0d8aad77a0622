# Copyright 2026 The eltqc authors
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

import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str, sourcedir: str = "") -> None:
        super().__init__(name, sources=[])
        self.sourcedir = str(Path(sourcedir).resolve())


class CMakeBuild(build_ext):
    def build_extension(self, ext: CMakeExtension) -> None:
        ext_fullpath = Path.cwd() / self.get_ext_fullpath(ext.name)
        build_temp = Path(self.build_temp) / ext.name
        build_temp.mkdir(parents=True, exist_ok=True)

        cmake_args = [
            "-DCMAKE_BUILD_TYPE=Release",
            "-DELTQC_BUILD_TESTS=OFF",
            "-DELTQC_BUILD_PYTHON=ON",
            f"-DPython3_EXECUTABLE={sys.executable}",
        ]
        subprocess.run(
            ["cmake", ext.sourcedir, *cmake_args], cwd=build_temp, check=True
        )
        subprocess.run(
            ["cmake", "--build", ".", "--target", "eltqc_core", "-j2"],
            cwd=build_temp,
            check=True,
        )

        # The module is written under <binary dir>/python/eltqc; place it
        # where setuptools expects this extension.
        built = sorted((build_temp / "python" / "eltqc").glob("_core*"))
        if not built:
            raise RuntimeError("the compiled extension module was not produced")
        ext_fullpath.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(built[0], ext_fullpath)


setup(
    ext_modules=[CMakeExtension("eltqc._core")],
    cmdclass={"build_ext": CMakeBuild},
)

"""Build script: compiles the optional Cython kernels.

The package works without them; ``circlearea._backend`` falls back to the
pure-Python twin when the extension is missing.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("CIRCLEAREA_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "circlearea._ckernels",
                    ["src/circlearea/_ckernels.pyx"],
                    # no fast-math, no FMA contraction: kernels must match the Python twin bit for bit
                    extra_compile_args=["-O2", "-ffp-contract=off", "-fno-fast-math"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)

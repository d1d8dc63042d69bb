"""Build script: compiles the optional fast kernel when Cython is available.

The package is fully functional without the extension; ealie.kernel falls back
to the pure-Python implementation at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("ealie._kernel", ["src/ealie/_kernel.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"ealie: skipping compiled kernel ({exc}); pure-Python fallback will be used")

setup(ext_modules=ext_modules)

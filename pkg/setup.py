"""Build script: compiles the optional fast kernels.

The package works without the compiled extensions (pure-Python twins are
selected at import time), so any build failure here degrades gracefully.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "monoidkit._kernels._snf_cy",
                ["src/monoidkit/_kernels/_snf_cy.pyx"],
            ),
            Extension(
                "monoidkit._kernels._closure_cy",
                ["src/monoidkit/_kernels/_closure_cy.pyx"],
            ),
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    import sys

    print(f"monoidkit: skipping compiled kernels ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)

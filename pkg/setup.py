"""Build hook for the optional compiled diagram kernel.

The package is pure Python plus one small Cython extension; if Cython or a
C compiler is missing the build proceeds and the pure-Python kernel is used.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "tlcat._kernel_cy",
                ["src/tlcat/_kernel_cy.pyx"],
                optional=True,
            )
        ]
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)

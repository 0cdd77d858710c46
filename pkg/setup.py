from setuptools import setup

# The compiled enumeration kernel is optional: if Cython (or a C compiler)
# is unavailable the package falls back to the pure-Python twin at import.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/sgclass/_enum_cy.pyx"],
        language_level=3,
        compiler_directives={"boundscheck": False, "wraparound": False},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# The compiled search kernels are optional: without them the package falls
# back to the pure-Python lane selected in sidonkit.kernels at import time.
extensions = []
if cythonize is not None:
    extensions = cythonize(
        [Extension("sidonkit._kernels_cy", ["src/sidonkit/_kernels_cy.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=extensions)

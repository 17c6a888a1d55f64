from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # Without Cython the package still installs; imocheck.backend falls back
    # to the pure-Python kernels at import time.
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("imocheck._kernel_cy", ["src/imocheck/_kernel_cy.pyx"],
                   extra_compile_args=["-O2"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)

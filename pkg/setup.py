from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("seelab._kernels", ["src/seelab/_kernels.pyx"])],
        language_level="3",
    )
except ImportError:
    # pure-Python fallback in seelab._kernels_py is used instead
    ext_modules = []

setup(ext_modules=ext_modules)

# Builds the optional compiled kernel extension. The package works without
# it (pure-Python fallback selected at import); build in place with:
#     python3 setup.py build_ext --inplace
from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("qident._kernels", ["src/qident/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)

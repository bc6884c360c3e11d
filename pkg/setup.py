from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; lensfib falls back at import
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("lensfib._kernels", ["src/lensfib/_kernels.pyx"], optional=True,
                   extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)

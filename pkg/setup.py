from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # the pure-Python backend is used instead
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("edgedepth.oracle._kernel", ["src/edgedepth/oracle/_kernel.pyx"],
                   extra_compile_args=["-O3"], optional=True)],
        compiler_directives={"language_level": 3},
    )

setup(ext_modules=ext_modules)

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # the pure-Python loops are used instead
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("gdaha.arith._native", ["src/gdaha/arith/_native.pyx"], extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)

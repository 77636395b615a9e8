from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "pathdraw._kernels._native",
                ["src/pathdraw/_kernels/_native.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
    # the pure-Python kernels are a full substitute, so a failed compile
    # must not break installation
    for ext in ext_modules:
        ext.optional = True

setup(ext_modules=ext_modules)

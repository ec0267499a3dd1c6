from setuptools import Extension, setup
from Cython.Build import cythonize

extensions = [
    Extension(
        "orthoframes._fastkernels",
        ["src/orthoframes/_fastkernels.pyx"],
        extra_compile_args=["-O3"],
    )
]

setup(
    ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"}),
)

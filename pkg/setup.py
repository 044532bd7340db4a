import os

from setuptools import Extension, setup

# SRSSCRYPT_NO_EXT=1 installs the pure-Python package only.
ext_modules = []
if not os.environ.get("SRSSCRYPT_NO_EXT"):
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension(
                "srsscrypt._kernels",
                ["src/srsscrypt/_kernels.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                # keyed sequences must be bit-identical to the Python fallback
                extra_compile_args=["-O2", "-ffp-contract=off", "-fno-fast-math"],
            )],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)

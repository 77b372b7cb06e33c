from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "spincert._modp_core",
                ["src/spincert/_modp_core.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

# The compiled module is optional: spincert.kernels falls back to the
# NumPy implementation when the extension is absent.
setup(ext_modules=ext_modules)

import os

from setuptools import setup

ext_modules = []
if os.environ.get("VCSIM_NO_EXT", "") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "vcsim._oracle_core",
                    ["src/vcsim/_oracle_core.pyx"],
                    extra_compile_args=["-O3"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)

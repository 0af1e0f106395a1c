import sys

from setuptools import Extension, setup


def extensions():
    """Build the compiled kernel extension when Cython is available.

    The package is fully functional without it (covosc._corepy is the
    NumPy fallback), so a missing compiler or Cython only costs speed.
    """
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError as exc:
        print(f"covosc: building without compiled core ({exc})", file=sys.stderr)
        return []

    ext = Extension(
        "covosc._core",
        ["src/covosc/_core.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    ext.optional = True
    return cythonize([ext], language_level=3)


setup(ext_modules=extensions())

"""Build hook for the optional Cython kernels.

The package works without the compiled extension (a NumPy fallback is
selected at import time), so a failed build here should not make the
install unusable: we skip the extension when Cython is unavailable.
"""

from setuptools import Extension, setup

try:
    import numpy as np
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "tabsev.kmodes._kernels_cy",
                sources=["src/tabsev/kmodes/_kernels_cy.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        language_level="3",
    )

setup(ext_modules=ext_modules)

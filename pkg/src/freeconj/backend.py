"""Kernel backend selection.

The word kernels exist twice: JIT-compiled (``_kernels_numba``) and pure
numpy/Python (``_kernels_py``).  The environment variable ``FREECONJ_BACKEND``
picks one at import time:

    auto   -- numba if importable, else numpy (default)
    numba  -- require the JIT kernels, fail loudly if numba is missing
    numpy  -- force the pure fallback

``use_backend()`` switches at runtime (used by tests and the benchmark).
"""

import os
import warnings

from . import _kernels_py

_impl = _kernels_py
_name = "numpy"


def _load(name):
    if name == "numpy":
        return _kernels_py, "numpy"
    if name == "numba":
        from . import _kernels_numba
        return _kernels_numba, "numba"
    if name == "auto":
        try:
            from . import _kernels_numba
            return _kernels_numba, "numba"
        except ImportError:
            warnings.warn("numba not available, using pure numpy kernels")
            return _kernels_py, "numpy"
    raise ValueError(f"unknown backend {name!r} (expected auto, numba or numpy)")


def use_backend(name):
    """Select the kernel implementation; returns the active backend name."""
    global _impl, _name, free_reduce, concat_reduce, cyclic_bounds, lex_less, substitute
    _impl, _name = _load(name)
    free_reduce = _impl.free_reduce
    concat_reduce = _impl.concat_reduce
    cyclic_bounds = _impl.cyclic_bounds
    lex_less = _impl.lex_less
    substitute = _impl.substitute
    return _name


def backend_name():
    return _name


use_backend(os.environ.get("FREECONJ_BACKEND", "auto"))

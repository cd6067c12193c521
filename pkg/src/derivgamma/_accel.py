"""Kernel backend selection.

The numba backend is used when numba imports cleanly and the environment
variable ``DERIVGAMMA_NO_JIT`` is unset (or ``0``).  Setting it to ``1``
routes every hot loop through the vectorised numpy implementation.
"""
import contextlib
import os

from . import _kernels_numpy

BACKENDS = ("numba", "numpy")

try:
    from . import _kernels_jit
except ImportError:  # pragma: no cover - numba missing
    _kernels_jit = None


def _initial():
    if os.environ.get("DERIVGAMMA_NO_JIT", "0") not in ("", "0") or _kernels_jit is None:
        return "numpy"
    return "numba"


_active = _initial()


def backend_name():
    return _active


def available():
    return tuple(b for b in BACKENDS if b == "numpy" or _kernels_jit is not None)


def set_backend(name):
    global _active
    if name not in available():
        raise ValueError(f"backend {name!r} unavailable; choose from {available()}")
    _active = name


@contextlib.contextmanager
def use_backend(name):
    previous = _active
    set_backend(name)
    try:
        yield
    finally:
        set_backend(previous)


def kernels():
    return _kernels_jit if _active == "numba" else _kernels_numpy

"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise, or when
the environment variable ``SIGCIRCLES_PURE`` is set to a non-empty value other
than ``0``, the pure-Python ``_pykernels`` module is used.
"""
import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("SIGCIRCLES_PURE", "0") in ("", "0"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        pass

simple_cycles = _impl.simple_cycles
hamiltonian_cycles = _impl.hamiltonian_cycles
min_switching = _impl.min_switching

__all__ = ["BACKEND", "simple_cycles", "hamiltonian_cycles", "min_switching"]

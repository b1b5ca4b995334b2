"""Backend dispatch for the hot matrix kernels.

The compiled extension is preferred when present; ``ZZDECOMP_PURE=1`` in the
environment forces the numpy fallback.  ``set_backend`` exists for the
benchmark and for tests that compare the two implementations.
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_py

_impl = _kernels_py
if os.environ.get("ZZDECOMP_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled

        _impl = _compiled
    except ImportError:
        pass


def backend_name() -> str:
    return _impl.BACKEND


def set_backend(name: str) -> None:
    """Switch kernels at runtime ("compiled" or "python")."""
    global _impl
    if name == "python":
        _impl = _kernels_py
    elif name == "compiled":
        from . import _kernels as _compiled  # ImportError if not built

        _impl = _compiled
    else:
        raise ValueError(f"unknown backend {name!r}")


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return _impl.matmul(a, b, p)


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    return _impl.rref(a, p)

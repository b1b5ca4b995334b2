"""Pure-Python (numpy) implementations of the mod-p matrix kernels.

Fallback used when the compiled extension is unavailable or disabled via
``ZZDECOMP_PURE=1``.  Must stay bit-identical to ``_kernels.pyx``: the same
pivot choice (first nonzero row, top to bottom), the same normalization
order, so that results across backends are interchangeable.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Return (a @ b) mod p for int64 matrices with entries in [0, p)."""
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"matmul shape mismatch: {a.shape} @ {b.shape}")
    if a.shape[0] == 0 or b.shape[1] == 0 or a.shape[1] == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    # entries < p < 2^16 and inner dim < 2^31, so int64 never overflows
    return (a @ b) % p


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Reduced row-echelon form over F_p with an accumulated row transform.

    Returns (reduced, pivots, transform) where transform @ a == reduced
    (mod p), transform is m x m invertible, and pivots lists pivot column
    indices in increasing order.
    """
    m, n = a.shape
    r = a.copy()
    t = np.eye(m, dtype=np.int64)
    pivots = []
    row = 0
    for col in range(n):
        if row >= m:
            break
        sub = r[row:, col]
        nz = np.nonzero(sub)[0]
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            r[[row, piv]] = r[[piv, row]]
            t[[row, piv]] = t[[piv, row]]
        inv = pow(int(r[row, col]), p - 2, p)
        if inv != 1:
            r[row] = (r[row] * inv) % p
            t[row] = (t[row] * inv) % p
        col_vals = r[:, col].copy()
        col_vals[row] = 0
        hit = np.nonzero(col_vals)[0]
        if hit.size:
            r[hit] = (r[hit] - np.outer(col_vals[hit], r[row])) % p
            t[hit] = (t[hit] - np.outer(col_vals[hit], t[row])) % p
        pivots.append(col)
        row += 1
    return r, np.asarray(pivots, dtype=np.int64), t

# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled mod-p matrix kernels: matmul and rref with transform.

Semantics are defined by _kernels_py; this file must produce bit-identical
output (same pivot rule, same elimination order).
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND = "compiled"


cdef long long _minv(long long x, long long p):
    # modular inverse by extended Euclid; x in (0, p), p prime
    cdef long long a = x % p, b = p
    cdef long long u = 1, v = 0, q, tmp
    while b != 0:
        q = a / b
        tmp = a - q * b; a = b; b = tmp
        tmp = u - q * v; u = v; v = tmp
    u %= p
    if u < 0:
        u += p
    return u


def matmul(a, b, long long p):
    """Return (a @ b) mod p for int64 matrices with entries in [0, p)."""
    cdef cnp.ndarray[cnp.int64_t, ndim=2] aa = np.ascontiguousarray(a, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=2] bb = np.ascontiguousarray(b, dtype=np.int64)
    if aa.shape[1] != bb.shape[0]:
        raise ValueError(f"matmul shape mismatch: {a.shape} @ {b.shape}")
    cdef Py_ssize_t m = aa.shape[0], k = aa.shape[1], n = bb.shape[1]
    cdef cnp.ndarray[cnp.int64_t, ndim=2] out = np.zeros((m, n), dtype=np.int64)
    cdef Py_ssize_t i, j, l
    cdef long long acc
    for i in range(m):
        for j in range(n):
            acc = 0
            for l in range(k):
                acc += aa[i, l] * bb[l, j]
            out[i, j] = acc % p
    return out


def rref(a, long long p):
    """Reduced row-echelon form over F_p with an accumulated row transform.

    Returns (reduced, pivots, transform); transform @ a == reduced mod p.
    """
    cdef cnp.ndarray[cnp.int64_t, ndim=2] r = np.array(a, dtype=np.int64, order="C", copy=True)
    cdef Py_ssize_t m = r.shape[0], n = r.shape[1]
    cdef cnp.ndarray[cnp.int64_t, ndim=2] t = np.eye(m, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] piv_buf = np.empty(m if m < n else n, dtype=np.int64)
    cdef Py_ssize_t npiv = 0, row = 0
    cdef Py_ssize_t col, i, j, piv
    cdef long long inv, c
    for col in range(n):
        if row >= m:
            break
        piv = -1
        for i in range(row, m):
            if r[i, col] != 0:
                piv = i
                break
        if piv == -1:
            continue
        if piv != row:
            for j in range(n):
                c = r[row, j]; r[row, j] = r[piv, j]; r[piv, j] = c
            for j in range(m):
                c = t[row, j]; t[row, j] = t[piv, j]; t[piv, j] = c
        inv = _minv(r[row, col], p)
        if inv != 1:
            for j in range(n):
                r[row, j] = (r[row, j] * inv) % p
            for j in range(m):
                t[row, j] = (t[row, j] * inv) % p
        for i in range(m):
            if i == row:
                continue
            c = r[i, col]
            if c == 0:
                continue
            for j in range(n):
                r[i, j] = (r[i, j] - c * r[row, j]) % p
                if r[i, j] < 0:
                    r[i, j] += p
            for j in range(m):
                t[i, j] = (t[i, j] - c * t[row, j]) % p
                if t[i, j] < 0:
                    t[i, j] += p
        piv_buf[npiv] = col
        npiv += 1
        row += 1
    return r, piv_buf[:npiv].copy(), t

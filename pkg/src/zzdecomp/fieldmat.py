"""Exact linear algebra over a prime field F_p.

Everything here is a pure function of immutable inputs: matrices wrap
non-writeable int64 numpy arrays, subspaces always store the canonical
(reduced-echelon) basis, and all tie-breaking is deterministic, so repeated
runs are bit-identical.  Zero-row and zero-column matrices are first-class
and represent maps to or from the zero space.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from . import kernels
from .errors import (
    DimensionMismatchError,
    ModulusMismatchError,
    SingularMatrixError,
    ZzdecompError,
)

MAX_MODULUS = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def validate_modulus(p: int) -> int:
    """Check 2 <= p < 2^16 and p prime; return p."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise ZzdecompError(f"modulus must be an integer, got {p!r}")
    if not 2 <= p < MAX_MODULUS:
        raise ZzdecompError(f"modulus {p} out of range [2, 2^16)")
    if not is_prime(p):
        raise ZzdecompError(f"modulus {p} is not prime")
    return p


@dataclass(frozen=True)
class FieldScalar:
    """A residue in [0, p) over the prime field F_p."""

    value: int
    p: int

    def __post_init__(self):
        validate_modulus(self.p)
        object.__setattr__(self, "value", self.value % self.p)

    def _check(self, other: "FieldScalar") -> None:
        if self.p != other.p:
            raise ModulusMismatchError(f"F_{self.p} vs F_{other.p}")

    def __add__(self, other: "FieldScalar") -> "FieldScalar":
        self._check(other)
        return FieldScalar(self.value + other.value, self.p)

    def __sub__(self, other: "FieldScalar") -> "FieldScalar":
        self._check(other)
        return FieldScalar(self.value - other.value, self.p)

    def __mul__(self, other: "FieldScalar") -> "FieldScalar":
        self._check(other)
        return FieldScalar(self.value * other.value, self.p)

    def inverse(self) -> "FieldScalar":
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse")
        return FieldScalar(pow(self.value, self.p - 2, self.p), self.p)


class RrefResult(NamedTuple):
    reduced: "FieldMatrix"
    pivots: tuple[int, ...]
    transform: "FieldMatrix"


class FieldMatrix:
    """Dense matrix over F_p backed by a read-only int64 array."""

    __slots__ = ("p", "a")

    def __init__(self, entries, p: int, *, _trusted: bool = False):
        if _trusted:
            arr = entries
        else:
            validate_modulus(p)
            arr = np.array(entries, dtype=np.int64)
            if arr.ndim != 2:
                raise DimensionMismatchError(f"expected 2-d entries, got shape {arr.shape}")
            arr = arr % p
        arr.setflags(write=False)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "a", arr)

    def __setattr__(self, name, value):
        raise AttributeError("FieldMatrix is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def _wrap(cls, arr: np.ndarray, p: int) -> "FieldMatrix":
        return cls(np.ascontiguousarray(arr, dtype=np.int64), p, _trusted=True)

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> "FieldMatrix":
        validate_modulus(p)
        return cls._wrap(np.zeros((rows, cols), dtype=np.int64), p)

    @classmethod
    def identity(cls, n: int, p: int) -> "FieldMatrix":
        validate_modulus(p)
        return cls._wrap(np.eye(n, dtype=np.int64), p)

    @classmethod
    def column_vector(cls, vec, p: int) -> "FieldMatrix":
        arr = np.array(vec, dtype=np.int64).reshape(-1, 1) % p
        return cls._wrap(arr, p)

    @classmethod
    def from_columns(cls, cols: Iterable[np.ndarray], n_rows: int, p: int) -> "FieldMatrix":
        cols = list(cols)
        if not cols:
            return cls.zeros(n_rows, 0, p)
        arr = np.column_stack([np.asarray(c, dtype=np.int64) % p for c in cols])
        return cls._wrap(arr, p)

    # -- basic structure ----------------------------------------------

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.a.shape

    def scalar(self, i: int, j: int) -> FieldScalar:
        return FieldScalar(int(self.a[i, j]), self.p)

    def col(self, j: int) -> np.ndarray:
        return self.a[:, j].copy()

    def t(self) -> "FieldMatrix":
        return FieldMatrix._wrap(self.a.T, self.p)

    def is_zero(self) -> bool:
        return not self.a.any()

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return self.p == other.p and self.shape == other.shape and bool(np.array_equal(self.a, other.a))

    def __hash__(self) -> int:
        return hash((self.p, self.shape, self.a.tobytes()))

    def __repr__(self) -> str:
        return f"FieldMatrix({self.a.tolist()!r}, p={self.p})"

    def _check(self, other: "FieldMatrix") -> None:
        if self.p != other.p:
            raise ModulusMismatchError(f"F_{self.p} vs F_{other.p}")

    # -- arithmetic ----------------------------------------------------

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        self._check(other)
        if self.cols != other.rows:
            raise DimensionMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        return FieldMatrix._wrap(kernels.matmul(self.a, other.a, self.p), self.p)

    def __add__(self, other: "FieldMatrix") -> "FieldMatrix":
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatchError(f"cannot add {self.shape} and {other.shape}")
        return FieldMatrix._wrap((self.a + other.a) % self.p, self.p)

    def __sub__(self, other: "FieldMatrix") -> "FieldMatrix":
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatchError(f"cannot subtract {other.shape} from {self.shape}")
        return FieldMatrix._wrap((self.a - other.a) % self.p, self.p)

    def scale(self, c: int) -> "FieldMatrix":
        return FieldMatrix._wrap((self.a * (c % self.p)) % self.p, self.p)

    # -- elimination-based operations ---------------------------------

    def rref(self) -> RrefResult:
        r, piv, t = kernels.rref(self.a, self.p)
        return RrefResult(
            FieldMatrix._wrap(r, self.p),
            tuple(int(c) for c in piv),
            FieldMatrix._wrap(t, self.p),
        )

    def rank(self) -> int:
        return len(kernels.rref(self.a, self.p)[1])

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def inverse(self) -> "FieldMatrix":
        if self.rows != self.cols:
            raise SingularMatrixError(f"non-square {self.shape}")
        r, piv, t = kernels.rref(self.a, self.p)
        if len(piv) != self.rows:
            raise SingularMatrixError(f"rank {len(piv)} < {self.rows}")
        return FieldMatrix._wrap(t, self.p)

    def solve(self, rhs: "FieldMatrix") -> "FieldMatrix | None":
        """A particular X with self @ X = rhs (free variables zero), or None."""
        self._check(rhs)
        if rhs.rows != self.rows:
            raise DimensionMismatchError(f"solve: {self.shape} vs rhs {rhs.shape}")
        aug = np.hstack([self.a, rhs.a])
        r, piv, _ = kernels.rref(aug, self.p)
        piv = [int(c) for c in piv]
        if any(c >= self.cols for c in piv):
            return None
        x = np.zeros((self.cols, rhs.cols), dtype=np.int64)
        for row_idx, c in enumerate(piv):
            x[c] = r[row_idx, self.cols:]
        return FieldMatrix._wrap(x, self.p)

    def null_space(self) -> "FieldMatrix":
        """Columns form the standard basis of the kernel (free columns ascending)."""
        r, piv, _ = kernels.rref(self.a, self.p)
        piv = [int(c) for c in piv]
        free = [c for c in range(self.cols) if c not in piv]
        out = np.zeros((self.cols, len(free)), dtype=np.int64)
        for k, f in enumerate(free):
            out[f, k] = 1
            for row_idx, c in enumerate(piv):
                if c < f:
                    out[c, k] = (-int(r[row_idx, f])) % self.p
        return FieldMatrix._wrap(out, self.p)


def hstack(mats: Iterable[FieldMatrix]) -> FieldMatrix:
    mats = list(mats)
    if not mats:
        raise ValueError("hstack of no matrices")
    p = mats[0].p
    for m in mats[1:]:
        mats[0]._check(m)
    return FieldMatrix._wrap(np.hstack([m.a for m in mats]), p)


def vstack(mats: Iterable[FieldMatrix]) -> FieldMatrix:
    mats = list(mats)
    if not mats:
        raise ValueError("vstack of no matrices")
    p = mats[0].p
    for m in mats[1:]:
        mats[0]._check(m)
    return FieldMatrix._wrap(np.vstack([m.a for m in mats]), p)


def block_diag(mats: Iterable[FieldMatrix], p: int) -> FieldMatrix:
    """Block-diagonal assembly; handles zero-sized blocks."""
    mats = list(mats)
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    out = np.zeros((rows, cols), dtype=np.int64)
    r = c = 0
    for m in mats:
        if m.p != p:
            raise ModulusMismatchError(f"F_{m.p} block in F_{p} assembly")
        out[r : r + m.rows, c : c + m.cols] = m.a
        r += m.rows
        c += m.cols
    return FieldMatrix._wrap(out, p)


class Subspace:
    """A subspace of F_p^n stored by its canonical reduced-echelon basis.

    The basis matrix has the subspace's dimension many columns; its transpose
    is in reduced row-echelon form, which makes equality of subspaces plain
    structural equality.
    """

    __slots__ = ("ambient_dim", "p", "basis")

    def __init__(self, basis: FieldMatrix, *, _canonical: bool = False):
        if not _canonical:
            basis = _canonical_basis(basis)
        object.__setattr__(self, "ambient_dim", basis.rows)
        object.__setattr__(self, "p", basis.p)
        object.__setattr__(self, "basis", basis)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def span(cls, vectors: FieldMatrix) -> "Subspace":
        """Subspace spanned by the columns of ``vectors``."""
        return cls(vectors)

    @classmethod
    def zero(cls, ambient_dim: int, p: int) -> "Subspace":
        return cls(FieldMatrix.zeros(ambient_dim, 0, p), _canonical=True)

    @classmethod
    def full(cls, ambient_dim: int, p: int) -> "Subspace":
        return cls(FieldMatrix.identity(ambient_dim, p), _canonical=True)

    @property
    def dim(self) -> int:
        return self.basis.cols

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, p={self.p})"

    def contains_vector(self, vec: FieldMatrix) -> bool:
        if vec.rows != self.ambient_dim:
            raise DimensionMismatchError(f"vector in F^{vec.rows}, ambient {self.ambient_dim}")
        return self.basis.solve(vec) is not None

    def contains(self, other: "Subspace") -> bool:
        if other.dim == 0:
            return True
        return self.basis.solve(other.basis) is not None

    def __add__(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatchError("ambient dimensions differ")
        return Subspace.span(hstack([self.basis, other.basis]))

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatchError("ambient dimensions differ")
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim, self.p)
        stacked = hstack([self.basis, other.basis.scale(-1)])
        ker = stacked.null_space()
        coeffs = FieldMatrix._wrap(ker.a[: self.dim, :], self.p)
        return Subspace.span(self.basis @ coeffs)

    def image_under(self, m: FieldMatrix) -> "Subspace":
        if m.cols != self.ambient_dim:
            raise DimensionMismatchError(f"map expects F^{m.cols}, subspace in F^{self.ambient_dim}")
        return Subspace.span(m @ self.basis)


def _canonical_basis(vectors: FieldMatrix) -> FieldMatrix:
    """Canonical column basis of the span: nonzero rows of rref(vectorsᵀ)."""
    r, piv, _ = kernels.rref(vectors.a.T, vectors.p)
    k = len(piv)
    return FieldMatrix._wrap(r[:k, :].T, vectors.p)


def rref(m: FieldMatrix) -> RrefResult:
    """Reduced row-echelon form with pivot columns and the invertible transform."""
    return m.rref()


def column_space(m: FieldMatrix) -> Subspace:
    return Subspace.span(m)


def kernel_space(m: FieldMatrix) -> Subspace:
    return Subspace(m.null_space())


def preimage_subspace(mapping: FieldMatrix, target: Subspace) -> Subspace:
    """The subspace {v : mapping @ v in target}; always contains ker(mapping)."""
    if mapping.rows != target.ambient_dim:
        raise DimensionMismatchError(
            f"map into F^{mapping.rows} but target ambient is {target.ambient_dim}"
        )
    if target.dim == 0:
        return kernel_space(mapping)
    stacked = hstack([mapping, target.basis.scale(-1)])
    ker = stacked.null_space()
    return Subspace.span(FieldMatrix._wrap(ker.a[: mapping.cols, :], mapping.p))


def complement(s: Subspace) -> Subspace:
    """Deterministic internal complement: standard basis vectors at the
    non-pivot positions of the echelonized basis."""
    piv = set(_pivot_positions(s))
    free = [j for j in range(s.ambient_dim) if j not in piv]
    out = np.zeros((s.ambient_dim, len(free)), dtype=np.int64)
    for k, j in enumerate(free):
        out[j, k] = 1
    return Subspace(FieldMatrix._wrap(out, s.p), _canonical=True)


def _pivot_positions(s: Subspace) -> tuple[int, ...]:
    # the stored basis is canonical, so pivots are the leading rows
    piv = []
    for j in range(s.basis.cols):
        col = s.basis.a[:, j]
        piv.append(int(np.nonzero(col)[0][0]))
    return tuple(piv)


def complement_within(inner: Subspace, outer: Subspace) -> Subspace:
    """A complement of ``inner`` inside ``outer`` (inner must lie in outer).

    Chosen deterministically by scanning outer's canonical basis and keeping
    the columns independent modulo the part already collected.
    """
    if not outer.contains(inner):
        raise ZzdecompError("inner subspace not contained in outer")
    kept: list[np.ndarray] = []
    acc = inner.basis
    for j in range(outer.basis.cols):
        v = FieldMatrix.column_vector(outer.basis.col(j), outer.p)
        cand = hstack([acc, v])
        if cand.rank() > acc.cols + len(kept) - (acc.cols - inner.basis.cols):
            pass
        if cand.rank() == acc.cols + 1:
            kept.append(outer.basis.col(j))
            acc = cand
    return Subspace.span(FieldMatrix.from_columns(kept, outer.ambient_dim, outer.p))


def random_matrix(rows: int, cols: int, p: int, rng: np.random.Generator) -> FieldMatrix:
    return FieldMatrix._wrap(rng.integers(0, p, size=(rows, cols), dtype=np.int64), p)


def random_invertible(n: int, p: int, rng: np.random.Generator) -> FieldMatrix:
    """Uniform invertible matrix by rejection sampling."""
    if n == 0:
        return FieldMatrix.zeros(0, 0, p)
    while True:
        m = random_matrix(n, n, p, rng)
        if m.rank() == n:
            return m


def random_complement(s: Subspace, rng: np.random.Generator) -> Subspace:
    """A uniformly random internal complement of ``s``."""
    k = s.ambient_dim - s.dim
    if k == 0:
        return Subspace.zero(s.ambient_dim, s.p)
    while True:
        cand = random_matrix(s.ambient_dim, k, s.p, rng)
        if hstack([s.basis, cand]).rank() == s.ambient_dim:
            return Subspace.span(cand)

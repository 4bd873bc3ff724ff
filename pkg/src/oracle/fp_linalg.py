"""
Exact linear algebra over F_p on int64 numpy arrays.

Entries are always kept reduced to [0, p−1]. Products go through
matmul_mod, which picks float64 BLAS when every dot product stays below
2^52 and falls back to int64 (or Python ints) otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from src.core.errors import OverflowBoundError, SizeMismatchError

_FLOAT_EXACT = 2**52
_INT64_SAFE = 2**62
# elimination multiplies two residues in int64
MAX_ELIMINATION_PRIME = 2**31


def mod_p(A, p: int) -> np.ndarray:
    return np.asarray(np.asarray(A) % p, dtype=np.int64)


def inv_mod_scalar(a: int, p: int) -> int:
    return pow(int(a) % p, -1, p)


def matmul_mod(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    if A.shape[1] != B.shape[0]:
        raise SizeMismatchError(f"cannot multiply {A.shape} by {B.shape}")
    bound = max(A.shape[1], 1) * (p - 1) ** 2
    if bound < _FLOAT_EXACT:
        out = A.astype(np.float64) @ B.astype(np.float64)
        return mod_p(np.rint(out).astype(np.int64), p)
    if bound < _INT64_SAFE:
        return mod_p(A.astype(np.int64) @ B.astype(np.int64), p)
    out = A.astype(object) @ B.astype(object)
    return mod_p(out, p)


@dataclass(frozen=True, eq=False)
class FpMatrix:
    entries: np.ndarray
    p: int

    def __post_init__(self):
        a = mod_p(self.entries, self.p)
        if a.ndim != 2:
            raise SizeMismatchError(f"expected a 2-d array, got shape {a.shape}")
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @classmethod
    def identity(cls, n: int, p: int) -> "FpMatrix":
        return cls(np.eye(n, dtype=np.int64), p)

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> "FpMatrix":
        return cls(np.zeros((rows, cols), dtype=np.int64), p)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def _check_field(self, other: "FpMatrix") -> None:
        if self.p != other.p:
            raise SizeMismatchError(f"matrices over F_{self.p} and F_{other.p}")

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        self._check_field(other)
        return FpMatrix(matmul_mod(self.entries, other.entries, self.p), self.p)

    def __add__(self, other: "FpMatrix") -> "FpMatrix":
        self._check_field(other)
        if self.entries.shape != other.entries.shape:
            raise SizeMismatchError(f"cannot add {self.entries.shape} and {other.entries.shape}")
        return FpMatrix(self.entries + other.entries, self.p)

    def __sub__(self, other: "FpMatrix") -> "FpMatrix":
        self._check_field(other)
        if self.entries.shape != other.entries.shape:
            raise SizeMismatchError(f"cannot subtract {other.entries.shape} from {self.entries.shape}")
        return FpMatrix(self.entries - other.entries, self.p)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FpMatrix):
            return NotImplemented
        return self.p == other.p and np.array_equal(self.entries, other.entries)

    __hash__ = None

    def power(self, k: int) -> "FpMatrix":
        out = FpMatrix.identity(self.rows, self.p)
        for _ in range(k):
            out = out @ self
        return out

    def is_identity(self) -> bool:
        return self.rows == self.cols and np.array_equal(self.entries, np.eye(self.rows, dtype=np.int64))

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()


# =========================
# elimination
# =========================
def rref_mod(A, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_p. Returns (R, pivot columns); zero rows of R are dropped."""
    if p >= MAX_ELIMINATION_PRIME:
        raise OverflowBoundError(f"elimination over F_{p} would overflow int64")
    R = mod_p(A, p).copy()
    if R.ndim != 2:
        raise SizeMismatchError(f"expected a 2-d array, got shape {R.shape}")
    R = R[np.any(R, axis=1)]
    m, n = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r] = R[r] * inv_mod_scalar(R[r, c], p) % p
        col = R[:, c].copy()
        col[r] = 0
        rows = np.flatnonzero(col)
        if rows.size:
            R[rows] = (R[rows] - np.outer(col[rows], R[r])) % p
        pivots.append(c)
        r += 1
    return R[:r], pivots


def rank_mod(A, p: int) -> int:
    return len(rref_mod(A, p)[1])


def rank_and_nullspace(M, p: int) -> tuple[int, list[tuple[int, ...]]]:
    """Rank and a right-nullspace basis of M over F_p.

    One basis vector per free column f, in increasing f: x_f = 1, the other
    free coordinates 0, pivot coordinates read off the RREF.
    """
    A = M.entries if isinstance(M, FpMatrix) else mod_p(M, p)
    n = A.shape[1]
    R, pivots = rref_mod(A, p)
    pivot_set = set(pivots)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        x = np.zeros(n, dtype=np.int64)
        x[f] = 1
        for row, c in enumerate(pivots):
            x[c] = (-R[row, f]) % p
        basis.append(tuple(int(v) for v in x))
    return len(pivots), basis


def inverse_mod(A, p: int) -> np.ndarray:
    A = mod_p(A, p)
    n = A.shape[0]
    if A.shape != (n, n):
        raise SizeMismatchError(f"cannot invert a {A.shape} matrix")
    R, pivots = rref_mod(np.concatenate([A, np.eye(n, dtype=np.int64)], axis=1), p)
    if pivots != list(range(n)):
        raise ValueError(f"matrix is singular mod {p}")
    return R[:n, n:]


class IncrementalRowSpace:
    """Row space over F_p kept in reduced echelon form, fed block by block.

    Adding a block costs one product against the current basis plus an
    elimination of whatever survives it.
    """

    def __init__(self, n_cols: int, p: int):
        self.n_cols = n_cols
        self.p = p
        self._basis = np.zeros((0, n_cols), dtype=np.int64)
        self._pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._pivots)

    @property
    def pivots(self) -> Sequence[int]:
        return tuple(self._pivots)

    def add_rows(self, block) -> int:
        """Merge the rows of `block`; returns how much the rank grew."""
        B = mod_p(block, self.p)
        if B.ndim != 2 or B.shape[1] != self.n_cols:
            raise SizeMismatchError(f"block of shape {B.shape} for a space with {self.n_cols} columns")
        B = B[np.any(B, axis=1)]
        if not B.shape[0]:
            return 0
        if self._pivots:
            B = mod_p(B - matmul_mod(B[:, self._pivots], self._basis, self.p), self.p)
        new_rows, new_pivots = rref_mod(B, self.p)
        if not new_pivots:
            return 0
        if self._pivots:
            self._basis = mod_p(
                self._basis - matmul_mod(self._basis[:, new_pivots], new_rows, self.p), self.p
            )
        basis = np.concatenate([self._basis, new_rows], axis=0)
        pivots = self._pivots + new_pivots
        order = np.argsort(pivots, kind="stable")
        self._basis = basis[order]
        self._pivots = [int(pivots[i]) for i in order]
        return len(new_pivots)

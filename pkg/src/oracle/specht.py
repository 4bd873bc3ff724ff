"""
Specht modules over F_p built from polytabloids.

S^λ sits inside the permutation module on tabloids. Each standard tableau t
gives a polytabloid e_t = Σ_{σ in C_t} sgn(σ)·{σt}; the e_t form a basis.
The Coxeter generator s_i acts on tabloids by swapping the rows of i and i+1,
and its matrix on the e_t basis is recovered by solving on the rows indexed
by the standard tabloids {t} (the restricted basis matrix is unitriangular)
and then checked against every tabloid coordinate.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import factorial, prod
from typing import Iterator

import numpy as np
from scipy import sparse
from sympy.combinatorics import Permutation
from sympy.utilities.iterables import multiset_permutations

from src.combinatorics.partitions import Partition, Prime
from src.core.config import DEFAULT_SETTINGS, Settings
from src.core.errors import BoundExceededError, RelationCheckFailedError
from src.oracle.fp_linalg import FpMatrix, inverse_mod, matmul_mod, mod_p

logger = logging.getLogger("specht_coh.oracle")

Tabloid = tuple[int, ...]  # Tabloid[k-1] is the row holding entry k

_CHECK_CHUNK = 256


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    @property
    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def columns(self) -> list[tuple[int, ...]]:
        width = len(self.rows[0]) if self.rows else 0
        return [tuple(row[j] for row in self.rows if len(row) > j) for j in range(width)]

    def tabloid(self) -> Tabloid:
        d = sum(len(r) for r in self.rows)
        rows = [0] * d
        for i, row in enumerate(self.rows):
            for x in row:
                rows[x - 1] = i
        return tuple(rows)


def tabloid_count(lam: Partition) -> int:
    return factorial(lam.d) // prod(factorial(x) for x in lam.parts)


def enumerate_tabloids(lam: Partition, settings: Settings = DEFAULT_SETTINGS) -> list[Tabloid]:
    """All row assignments of shape λ, lexicographic."""
    count = tabloid_count(lam)
    if count > settings.max_tabloids:
        raise BoundExceededError(f"tabloids of shape {lam}", count, settings.max_tabloids)
    letters = [i for i, size in enumerate(lam.parts) for _ in range(size)]
    return [tuple(t) for t in multiset_permutations(letters)]


def _fill(shape: tuple[int, ...], rows: list[list[int]], k: int, d: int) -> Iterator[Tableau]:
    if k > d:
        yield Tableau(tuple(tuple(r) for r in rows))
        return
    for i, size in enumerate(shape):
        if len(rows[i]) < size and (i == 0 or len(rows[i - 1]) > len(rows[i])):
            rows[i].append(k)
            yield from _fill(shape, rows, k + 1, d)
            rows[i].pop()


def standard_tableaux(lam: Partition) -> list[Tableau]:
    """Standard tableaux of shape λ ordered by row-reading word."""
    found = list(_fill(lam.parts, [[] for _ in lam.parts], 1, lam.d))
    return sorted(found, key=lambda t: t.reading_word)


@lru_cache(maxsize=16)
def _signed_permutations(h: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    return tuple((perm, Permutation(list(perm)).signature()) for perm in permutations(range(h)))


def polytabloid_terms(t: Tableau) -> Iterator[tuple[Tabloid, int]]:
    """(tabloid, sign) for every σ in the column group of t."""
    d = len(t.reading_word)
    columns = t.columns()
    choices = [_signed_permutations(len(col)) for col in columns]
    for combo in product(*choices):
        rows = [0] * d
        sign = 1
        for col, (perm, s) in zip(columns, combo):
            sign *= s
            for i, src in enumerate(perm):
                rows[col[src] - 1] = i
        yield tuple(rows), sign


@dataclass(frozen=True, eq=False)
class SpechtBasis:
    lam: Partition
    tabloids: tuple[Tabloid, ...]
    index: dict
    tableaux: tuple[Tableau, ...]
    polytabloids: sparse.csr_matrix  # tabloids × standard tableaux, entries ±1

    @property
    def dim(self) -> int:
        return len(self.tableaux)


def build_specht_basis(lam: Partition, settings: Settings = DEFAULT_SETTINGS) -> SpechtBasis:
    tabloids = enumerate_tabloids(lam, settings)
    index = {t: i for i, t in enumerate(tabloids)}
    tableaux = standard_tableaux(lam)
    rows, cols, vals = [], [], []
    for j, t in enumerate(tableaux):
        for tab, sign in polytabloid_terms(t):
            rows.append(index[tab])
            cols.append(j)
            vals.append(sign)
    E = sparse.coo_matrix((vals, (rows, cols)), shape=(len(tabloids), len(tableaux)), dtype=np.int64).tocsr()
    return SpechtBasis(lam=lam, tabloids=tuple(tabloids), index=index, tableaux=tuple(tableaux), polytabloids=E)


def swap_permutation(basis: SpechtBasis, i: int) -> np.ndarray:
    """Tabloid index permutation induced by s_i = (i, i+1), 1-based."""
    out = np.empty(len(basis.tabloids), dtype=np.int64)
    for k, tab in enumerate(basis.tabloids):
        swapped = list(tab)
        swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
        out[k] = basis.index[tuple(swapped)]
    return out


@dataclass(frozen=True, eq=False)
class SpechtRep:
    p: int
    lam: Partition
    dim: int
    gens: tuple[FpMatrix, ...]  # gens[i-1] is the action of s_i

    @property
    def d(self) -> int:
        return self.lam.d

    def act(self, word) -> FpMatrix:
        """Matrix of s_{w_1}···s_{w_m} for a word of 0-based generator indices."""
        out = FpMatrix.identity(self.dim, self.p)
        for g in word:
            out = out @ self.gens[g]
        return out

    def validate(self) -> None:
        n = len(self.gens)
        for i, g in enumerate(self.gens):
            if not (g @ g).is_identity():
                raise RelationCheckFailedError(f"s_{i + 1}^2 != 1 on S^{self.lam} mod {self.p}")
        for i in range(n - 1):
            if not self.act((i, i + 1) * 3).is_identity():
                raise RelationCheckFailedError(f"(s_{i + 1} s_{i + 2})^3 != 1 on S^{self.lam} mod {self.p}")
        for i in range(n):
            for j in range(i + 2, n):
                if not self.act((i, j) * 2).is_identity():
                    raise RelationCheckFailedError(f"(s_{i + 1} s_{j + 1})^2 != 1 on S^{self.lam} mod {self.p}")


def _generator_matrix(basis: SpechtBasis, E_std_inv: np.ndarray, std_rows: np.ndarray, i: int, p: int) -> FpMatrix:
    E = basis.polytabloids
    W = E[swap_permutation(basis, i), :]
    coords = matmul_mod(E_std_inv, mod_p(W[std_rows, :].toarray(), p), p)
    for start in range(0, basis.dim, _CHECK_CHUNK):
        stop = min(start + _CHECK_CHUNK, basis.dim)
        lhs = mod_p(E @ coords[:, start:stop], p)
        rhs = mod_p(W[:, start:stop].toarray(), p)
        if not np.array_equal(lhs, rhs):
            raise RelationCheckFailedError(f"s_{i}·e_t leaves the polytabloid span for {basis.lam} mod {p}")
    return FpMatrix(coords, p)


def build_specht_rep(lam: Partition, p: int, settings: Settings = DEFAULT_SETTINGS) -> SpechtRep:
    p = Prime(p)
    if lam.d < 2:
        return SpechtRep(p=int(p), lam=lam, dim=1, gens=())
    basis = build_specht_basis(lam, settings)
    std_rows = np.array([basis.index[t.tabloid()] for t in basis.tableaux], dtype=np.int64)
    E_std = mod_p(basis.polytabloids[std_rows, :].toarray(), p)
    try:
        E_std_inv = inverse_mod(E_std, p)
    except ValueError as e:
        raise RelationCheckFailedError(f"standard polytabloids of {lam} are dependent mod {p}") from e
    gens = tuple(_generator_matrix(basis, E_std_inv, std_rows, i, p) for i in range(1, lam.d))
    rep = SpechtRep(p=int(p), lam=lam, dim=basis.dim, gens=gens)
    rep.validate()
    logger.debug("built S^%s mod %d: dim %d, %d tabloids", lam, p, rep.dim, len(basis.tabloids))
    return rep

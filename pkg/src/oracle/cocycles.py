"""
H⁰ and H¹ of Σ_d with coefficients in a SpechtRep.

H¹ is Z¹/B¹ for the Coxeter presentation: a 1-cocycle is fixed by its values
f(s_1), ..., f(s_{d-1}), subject to one vector equation per relation word
x_1···x_m = 1:  Σ_k ρ(x_1···x_{k-1})·f(x_k) = 0.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy import sparse

from src.core.config import DEFAULT_SETTINGS, Settings
from src.core.errors import BoundExceededError, RelationCheckFailedError
from src.oracle.fp_linalg import FpMatrix, IncrementalRowSpace, rank_mod
from src.oracle.specht import SpechtRep

logger = logging.getLogger("specht_coh.oracle")


def coxeter_relations(d: int) -> list[tuple[int, ...]]:
    """Relation words on 0-based generator indices: squares, braids, then commuting pairs."""
    n = d - 1
    words = [(i, i) for i in range(n)]
    words += [(i, i + 1) * 3 for i in range(n - 1)]
    words += [(i, j) * 2 for i in range(n) for j in range(i + 2, n)]
    return words


def h0_dim(rep: SpechtRep) -> int:
    if not rep.gens:
        return rep.dim
    ident = FpMatrix.identity(rep.dim, rep.p)
    stacked = np.concatenate([(g - ident).entries for g in rep.gens], axis=0)
    return rep.dim - rank_mod(stacked, rep.p)


def relation_block(rep: SpechtRep, word: tuple[int, ...]) -> sparse.csr_matrix:
    """Fox-derivative rows of one relation word, over all (d-1)·dim unknowns."""
    dim = rep.dim
    n_unknowns = len(rep.gens) * dim
    rows, cols, vals = [], [], []
    prefix = FpMatrix.identity(dim, rep.p)
    for g in word:
        r, c = np.nonzero(prefix.entries)
        rows.append(r)
        cols.append(c + g * dim)
        vals.append(prefix.entries[r, c])
        prefix = prefix @ rep.gens[g]
    block = sparse.coo_matrix(
        (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
        shape=(dim, n_unknowns),
        dtype=np.int64,
    ).tocsr()  # duplicate entries are summed here
    block.data %= rep.p
    block.eliminate_zeros()
    return block


@dataclass(frozen=True)
class CocycleSummary:
    unknowns: int
    relations: int
    rank: int
    z1: int
    b1: int
    h0: int

    @property
    def h1(self) -> int:
        return self.z1 - self.b1

    def to_json(self) -> dict:
        return {
            "unknowns": self.unknowns,
            "relations": self.relations,
            "rank": self.rank,
            "z1": self.z1,
            "b1": self.b1,
            "h0": self.h0,
            "h1": self.h1,
        }


def cocycle_summary(rep: SpechtRep, settings: Settings = DEFAULT_SETTINGS) -> CocycleSummary:
    h0 = h0_dim(rep)
    if not rep.gens:
        return CocycleSummary(unknowns=0, relations=0, rank=0, z1=0, b1=0, h0=h0)
    n_unknowns = len(rep.gens) * rep.dim
    if n_unknowns > settings.max_cocycle_unknowns:
        raise BoundExceededError(f"cocycle unknowns for S^{rep.lam}", n_unknowns, settings.max_cocycle_unknowns)
    words = coxeter_relations(rep.d)
    space = IncrementalRowSpace(n_unknowns, rep.p)
    for word in words:
        space.add_rows(relation_block(rep, word).toarray())
    z1 = n_unknowns - space.rank
    b1 = rep.dim - h0
    if b1 > z1:
        raise RelationCheckFailedError(f"coboundaries ({b1}) exceed cocycles ({z1}) for S^{rep.lam} mod {rep.p}")
    logger.debug("S^%s mod %d: %d unknowns, rank %d, Z1 %d, B1 %d", rep.lam, rep.p, n_unknowns, space.rank, z1, b1)
    return CocycleSummary(unknowns=n_unknowns, relations=len(words), rank=space.rank, z1=z1, b1=b1, h0=h0)


def h1_dim(rep: SpechtRep, settings: Settings = DEFAULT_SETTINGS) -> int:
    return cocycle_summary(rep, settings).h1

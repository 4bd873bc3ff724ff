"""
Carry patterns of compositions and the submodule lattice of the symmetric power H⁰(d).

For β ∈ B(d) write each part in base p and add them column by column; the
carry pattern c(β) lists what is carried into the p¹, p², ... columns. The
submodules of H⁰(d) are the spans of β over order ideals of the carry poset
C(d), and each pattern c labels the composition factor L(λ) with λ the
dominance-maximal partition carrying c.

Carry patterns do not depend on the order of the addends, so C(d) and the
class sizes |{β : c(β)=c}| are computed from partitions (with multinomial
counts) instead of enumerating B(d).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import networkx as nx

from src.combinatorics.partitions import (
    Partition,
    Prime,
    add_power_to_first_part,
    checked_power,
    composition_count,
    dominates,
    enumerate_partitions,
    p_adic_digits,
    scale_partition,
    strictly_dominates,
)
from src.core.config import DEFAULT_SETTINGS, Settings
from src.core.errors import BoundExceededError, NonUniqueMaximumError, PreconditionFailedError

logger = logging.getLogger("specht_coh.carry")


@dataclass(frozen=True)
class CarryPattern:
    carries: tuple[int, ...]  # carries[0] is carried into the p^1 column

    def __post_init__(self):
        c = tuple(int(x) for x in self.carries)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "carries", c)

    def padded(self, n: int) -> tuple[int, ...]:
        return self.carries + (0,) * (n - len(self.carries))

    def leq(self, other: "CarryPattern") -> bool:
        n = max(len(self.carries), len(other.carries))
        return all(a <= b for a, b in zip(self.padded(n), other.padded(n)))

    def strictly_less(self, other: "CarryPattern") -> bool:
        return self != other and self.leq(other)

    def sort_key(self) -> tuple:
        return (sum(self.carries), len(self.carries), self.carries)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.carries) + ")"

    def to_json(self) -> list[int]:
        return list(self.carries)


ZERO_PATTERN = CarryPattern(())


def column_addition(parts: Iterable[int], p: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Schoolbook base-p addition of all parts.

    Returns (digits of the sum, carries out of each column), both least
    significant first; carries are not trimmed.
    """
    expansions = [p_adic_digits(x, p) for x in parts]
    width = max((len(e) for e in expansions), default=0)
    digits: list[int] = []
    carries: list[int] = []
    carry = 0
    j = 0
    while j < width or carry:
        s = carry + sum(e.digit(j) for e in expansions)
        carry, digit = divmod(s, p)
        digits.append(digit)
        carries.append(carry)
        j += 1
    return tuple(digits), tuple(carries)


def carry_pattern(beta: Iterable[int], p: int) -> CarryPattern:
    _, carries = column_addition(beta, p)
    return CarryPattern(carries)


@lru_cache(maxsize=200_000)
def _partition_pattern(lam: Partition, p: int) -> CarryPattern:
    return carry_pattern(lam.parts, p)


@lru_cache(maxsize=200_000)
def is_h0_factor(lam: Partition, p: int) -> bool:
    """[H⁰(d) : L(λ)] ≠ 0, read off the p-adic digit matrix of λ.

    In every column, a row whose digit is not p−1 forces zeros in that column
    for every lower row. The multiplicity is then 1.
    """
    p = Prime(p)
    rows = [p_adic_digits(x, p) for x in lam.parts]
    width = max((len(r) for r in rows), default=0)
    for j in range(width):
        column = [r.digit(j) for r in rows]
        for i, a in enumerate(column):
            if a != p - 1 and any(column[i + 1:]):
                return False
    return True


def twist_multiplicity_equal(lam: Partition, p: int) -> bool:
    return is_h0_factor(scale_partition(lam, p), p) == is_h0_factor(lam, p)


# =========================
# carry classes and factors
# =========================
@lru_cache(maxsize=512)
def _carry_classes(d: int, n: int, p: int, settings: Settings) -> dict[CarryPattern, tuple[Partition, ...]]:
    classes: dict[CarryPattern, list[Partition]] = {}
    for lam in enumerate_partitions(d, max_parts=n, settings=settings):
        classes.setdefault(_partition_pattern(lam, p), []).append(lam)
    ordered = sorted(classes, key=CarryPattern.sort_key)
    return {c: tuple(classes[c]) for c in ordered}


def _maximum(c: CarryPattern, members: tuple[Partition, ...], p: int) -> Partition:
    # members come in decreasing lexicographic order, which refines dominance,
    # so the first one is maximal; it is the maximum iff it dominates the rest.
    top = members[0]
    if all(dominates(top, lam) for lam in members[1:]):
        return top
    maxima = [lam for lam in members if not any(strictly_dominates(mu, lam) for mu in members)]
    logger.error("carry pattern %s at p=%d has %d maximal partitions: %s",
                 c, p, len(maxima), ", ".join(str(m) for m in maxima))
    raise NonUniqueMaximumError(
        f"carry pattern {c} (p={p}) has no unique dominance-maximal partition: "
        + ", ".join(str(m) for m in maxima)
    )


def h0_composition_factors(d: int, n: int, p: int, settings: Settings = DEFAULT_SETTINGS) -> dict[CarryPattern, Partition]:
    p = Prime(p)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    classes = _carry_classes(d, n, int(p), settings)
    return {c: _maximum(c, members, p) for c, members in classes.items()}


def hom_b_via_carry(lam: Partition, p: int, settings: Settings = DEFAULT_SETTINGS) -> int:
    """dim Hom_B(H⁰(d), λ) through carry patterns: 1 iff L(λ) is a factor and no
    factor μ ⊳ λ carries strictly more than λ."""
    p = Prime(p)
    if not is_h0_factor(lam, p):
        return 0
    c_lam = _partition_pattern(lam, p)
    # decreasing lex order: everything dominating lam comes before it
    for mu in enumerate_partitions(lam.d, settings=settings):
        if mu == lam:
            break
        if (
            is_h0_factor(mu, p)
            and c_lam.strictly_less(_partition_pattern(mu, p))
            and strictly_dominates(mu, lam)
        ):
            return 0
    return 1


def shift_factor_check(d: int, p: int, r: int, settings: Settings = DEFAULT_SETTINGS) -> bool:
    """Factors L(μ) of H⁰(d+p^r) with μ₁ ≥ p^r are exactly the L(λ+p^r), λ a factor of H⁰(d)."""
    p = Prime(p)
    q = checked_power(p, r)
    if q <= d:
        raise PreconditionFailedError(f"need p^r > d, got {p}^{r} = {q} <= {d}")
    big = {
        mu for mu in enumerate_partitions(d + q, settings=settings)
        if mu.parts[0] >= q and is_h0_factor(mu, p)
    }
    shifted = {
        add_power_to_first_part(lam, p, r)
        for lam in enumerate_partitions(d, settings=settings)
        if is_h0_factor(lam, p)
    }
    if big != shifted:
        logger.error("shift factors differ for d=%d p=%d r=%d: extra=%s missing=%s",
                     d, p, r, sorted(map(str, big - shifted)), sorted(map(str, shifted - big)))
    return big == shifted


# =========================
# poset and lattice
# =========================
@dataclass(frozen=True)
class CarryPoset:
    p: int
    d: int
    n: int
    patterns: tuple[CarryPattern, ...]
    cover_edges: tuple[tuple[CarryPattern, CarryPattern], ...]
    class_sizes: dict  # CarryPattern -> number of compositions β with that pattern
    factors: dict  # CarryPattern -> Partition

    @property
    def graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.patterns)
        g.add_edges_from(self.cover_edges)
        return g

    def lower_covers(self, c: CarryPattern) -> tuple[CarryPattern, ...]:
        return tuple(a for a, b in self.cover_edges if b == c)


def carry_poset(d: int, n: int, p: int, settings: Settings = DEFAULT_SETTINGS) -> CarryPoset:
    p = Prime(p)
    classes = _carry_classes(d, n, int(p), settings)
    factors = h0_composition_factors(d, n, p, settings)
    patterns = tuple(classes)
    order = nx.DiGraph()
    order.add_nodes_from(patterns)
    order.add_edges_from((a, b) for a in patterns for b in patterns if a.strictly_less(b))
    hasse = nx.transitive_reduction(order)
    index = {c: i for i, c in enumerate(patterns)}
    edges = tuple(sorted(hasse.edges, key=lambda e: (index[e[0]], index[e[1]])))
    sizes = {c: sum(composition_count(lam, n) for lam in members) for c, members in classes.items()}
    return CarryPoset(p=int(p), d=d, n=n, patterns=patterns, cover_edges=edges,
                      class_sizes=sizes, factors=factors)


@dataclass(frozen=True)
class LatticeNode:
    index: int
    ideal: tuple[CarryPattern, ...]
    dimension: int
    factors: tuple[Partition, ...]


@dataclass(frozen=True)
class LatticeEdge:
    lower: int
    upper: int
    pattern: CarryPattern
    factor: Partition


@dataclass(frozen=True)
class SubmoduleLattice:
    poset: CarryPoset
    nodes: tuple[LatticeNode, ...]
    edges: tuple[LatticeEdge, ...]

    @property
    def bottom(self) -> LatticeNode:
        return self.nodes[0]

    @property
    def top(self) -> LatticeNode:
        return self.nodes[-1]

    def ideal_sets(self) -> set[frozenset]:
        return {frozenset(node.ideal) for node in self.nodes}

    def closed_under_meet_and_join(self) -> bool:
        ideals = self.ideal_sets()
        return all(a | b in ideals and a & b in ideals for a in ideals for b in ideals)


def _ideal_key(ideal: frozenset) -> tuple:
    return (len(ideal), tuple(sorted(c.sort_key() for c in ideal)))


def submodule_lattice(d: int, n: int, p: int, settings: Settings = DEFAULT_SETTINGS) -> SubmoduleLattice:
    poset = carry_poset(d, n, p, settings)
    lower = {c: poset.lower_covers(c) for c in poset.patterns}

    # depth-first over ideals: I grows by any pattern whose lower covers are all in I
    start: frozenset = frozenset()
    seen = {start}
    stack = [start]
    raw_edges: list[tuple[frozenset, frozenset, CarryPattern]] = []
    while stack:
        ideal = stack.pop()
        for c in poset.patterns:
            if c in ideal or not all(b in ideal for b in lower[c]):
                continue
            bigger = ideal | {c}
            raw_edges.append((ideal, bigger, c))
            if bigger not in seen:
                seen.add(bigger)
                if len(seen) > settings.max_ideals:
                    raise BoundExceededError(f"order ideals of C({d}) at p={p}, n={n}",
                                             len(seen), settings.max_ideals)
                stack.append(bigger)

    ordered = sorted(seen, key=_ideal_key)
    index = {ideal: i for i, ideal in enumerate(ordered)}
    nodes = tuple(
        LatticeNode(
            index=i,
            ideal=tuple(sorted(ideal, key=CarryPattern.sort_key)),
            dimension=sum(poset.class_sizes[c] for c in ideal),
            factors=tuple(poset.factors[c] for c in sorted(ideal, key=CarryPattern.sort_key)),
        )
        for i, ideal in enumerate(ordered)
    )
    edges = tuple(sorted(
        (LatticeEdge(index[a], index[b], c, poset.factors[c]) for a, b, c in raw_edges),
        key=lambda e: (e.lower, e.upper),
    ))
    return SubmoduleLattice(poset=poset, nodes=nodes, edges=edges)

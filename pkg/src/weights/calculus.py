"""
GL_n weight arithmetic in integer coordinates.

ρ is never stored on its own: RootContext keeps 2ρ = (n−1, n−3, ..., 1−n), and
every multiple of ρ used here has an even coefficient (p odd), so all weights
stay integral.

Weight sets of Weyl modules: ν is a weight of V(κ) iff κ−ν lies in the root
lattice (equal coordinate sums for GL_n) and the dominant conjugate of ν is
dominated by κ. St_r = L((p^r−1)ρ) has the Weyl character, so the same test
decides Steinberg membership. Freudenthal's recursion is kept as an
independent check of that test.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import accumulate
from typing import Iterable, Optional

from src.carry.lattice import is_h0_factor
from src.combinatorics.partitions import (
    Partition,
    Prime,
    checked_power,
    is_p_multiple,
    scale_partition,
    strictly_dominates,
)
from src.core.config import DEFAULT_SETTINGS, Settings
from src.core.errors import (
    FalsifiedLemmaError,
    IndexOutOfRangeError,
    NotDominantError,
    OddMultipleError,
    PreconditionFailedError,
    RankBoundError,
    SizeMismatchError,
)
import logging

logger = logging.getLogger("specht_coh.weights")


@dataclass(frozen=True)
class Weight:
    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(x) for x in self.coords))

    @classmethod
    def of(cls, *coords: int) -> "Weight":
        return cls(tuple(coords))

    @classmethod
    def from_partition(cls, lam: Partition, n: int) -> "Weight":
        return cls(lam.padded(n))

    @property
    def n(self) -> int:
        return len(self.coords)

    def _check_rank(self, other: "Weight") -> None:
        if self.n != other.n:
            raise SizeMismatchError(f"weights of rank {self.n} and {other.n}")

    def __add__(self, other: "Weight") -> "Weight":
        self._check_rank(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check_rank(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def scale(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.coords))

    def __iter__(self):
        return iter(self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.coords) + ")"

    def to_json(self) -> list[int]:
        return list(self.coords)


@dataclass(frozen=True)
class RootContext:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"rank must be positive, got {self.n}")

    @property
    def simple_indices(self) -> range:
        return range(1, self.n)

    @cached_property
    def two_rho(self) -> Weight:
        return Weight(tuple(self.n - 1 - 2 * j for j in range(self.n)))

    @cached_property
    def positive_roots(self) -> tuple[tuple[int, int], ...]:
        """Pairs (i, j), 0-based, i < j, standing for e_i − e_j."""
        return tuple((i, j) for i in range(self.n) for j in range(i + 1, self.n))


def pairing(gamma: Weight, i: int) -> int:
    """⟨γ, α_i^∨⟩ = γ_i − γ_{i+1}, 1-based simple root index."""
    if not 1 <= i <= gamma.n - 1:
        raise IndexOutOfRangeError(f"simple root index {i} outside 1..{gamma.n - 1}")
    return gamma.coords[i - 1] - gamma.coords[i]


def pairing_vector(gamma: Weight) -> tuple[int, ...]:
    return tuple(pairing(gamma, i) for i in range(1, gamma.n))


def rho_multiple(k: int, n: int) -> Weight:
    """k·ρ for even k >= 0."""
    if k < 0:
        raise ValueError(f"multiple must be nonnegative, got {k}")
    if k % 2:
        raise OddMultipleError(f"{k}·ρ is not integral")
    return RootContext(n).two_rho.scale(k // 2)


def dominant_conjugate(gamma: Weight) -> Weight:
    return Weight(tuple(sorted(gamma.coords, reverse=True)))


def is_dominant(gamma: Weight) -> bool:
    return all(a >= b for a, b in zip(gamma.coords, gamma.coords[1:]))


def _below(nu: Iterable[int], kappa: Iterable[int]) -> bool:
    """Partial sums of nu bounded by those of kappa (sums assumed equal)."""
    return all(a <= b for a, b in zip(accumulate(nu), accumulate(kappa)))


def weyl_weights_contain(kappa: Weight, nu: Weight) -> bool:
    if not is_dominant(kappa):
        raise NotDominantError(f"{kappa} is not dominant")
    kappa._check_rank(nu)
    if sum(kappa.coords) != sum(nu.coords):
        return False
    return _below(dominant_conjugate(nu).coords, kappa.coords)


def freudenthal_multiplicity(kappa: Weight, nu: Weight, settings: Settings = DEFAULT_SETTINGS) -> int:
    """Multiplicity of ν in V(κ) by Freudenthal's recursion.

    Scaled by 4 so that everything is integral:
        (|2κ+2ρ|² − |2ν+2ρ|²)·m(ν) = 8 Σ_{α>0} Σ_{k≥1} m(ν+kα)·(ν+kα, α)
    The recursion runs over dominant weights only (m is W-invariant); the
    inner sum over k stops once |ν+kα| exceeds |κ|.
    """
    if kappa.n > settings.max_freudenthal_rank:
        raise RankBoundError(f"rank {kappa.n} exceeds Freudenthal bound {settings.max_freudenthal_rank}")
    if not is_dominant(kappa):
        raise NotDominantError(f"{kappa} is not dominant")
    kappa._check_rank(nu)
    if sum(kappa.coords) != sum(nu.coords):
        return 0

    ctx = RootContext(kappa.n)
    two_rho = ctx.two_rho.coords
    top = kappa.coords
    top_norm = sum(a * a for a in top)

    def shifted_norm(w: tuple[int, ...]) -> int:
        return sum((2 * a + r) ** 2 for a, r in zip(w, two_rho))

    top_shifted = shifted_norm(top)
    memo: dict[tuple[int, ...], int] = {}

    def mult(w: tuple[int, ...]) -> int:
        if w in memo:
            return memo[w]
        if w == top:
            result = 1
        elif not _below(w, top):
            result = 0
        else:
            total = 0
            for i, j in ctx.positive_roots:
                k = 1
                while True:
                    v = list(w)
                    v[i] += k
                    v[j] -= k
                    if sum(a * a for a in v) > top_norm:
                        break
                    m = mult(tuple(sorted(v, reverse=True)))
                    if m:
                        total += m * (v[i] - v[j])
                    k += 1
            denom = top_shifted - shifted_norm(w)
            if denom <= 0:
                raise ArithmeticError(f"Freudenthal denominator {denom} at {w} for {kappa}")
            result, rest = divmod(8 * total, denom)
            if rest:
                raise ArithmeticError(f"Freudenthal recursion not integral at {w} for {kappa}")
        memo[w] = result
        return result

    return mult(dominant_conjugate(nu).coords)


def steinberg_contains(gamma: Weight, p: int, r: int, n: int) -> bool:
    """γ is a weight of St_r = L((p^r−1)ρ) for GL_n."""
    p = Prime(p)
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    if gamma.n != n:
        raise SizeMismatchError(f"weight {gamma} does not have rank {n}")
    return weyl_weights_contain(rho_multiple(checked_power(p, r) - 1, n), gamma)


# =========================
# double-twist weight checks
# =========================
def ambient_rank(lam: Partition, mu: Partition) -> int:
    return max(len(lam), len(mu), 2)


def _check_double_twist_pair(lam: Partition, mu: Partition, p: int) -> Partition:
    q = p * p
    if lam.d != q * mu.d:
        raise PreconditionFailedError(f"|{lam}| = {lam.d} is not {q}·|{mu}|")
    if not is_h0_factor(lam, p):
        raise PreconditionFailedError(f"L{lam} is not a composition factor of H⁰({lam.d}) at p={p}")
    if is_p_multiple(lam, p):
        raise PreconditionFailedError(f"{lam} is of the form {p}·τ")
    target = scale_partition(mu, q)
    if not strictly_dominates(lam, target):
        raise PreconditionFailedError(f"{lam} does not strictly dominate {target}")
    return target


def is_double_twist_admissible(lam: Partition, mu: Partition, p: int) -> bool:
    try:
        _check_double_twist_pair(lam, mu, p)
    except PreconditionFailedError:
        return False
    return True


def lemma62_witness(lam: Partition, mu: Partition, p: int, strict: bool = False) -> Optional[int]:
    """A simple root index i with ⟨λ − p²μ, α_i^∨⟩ >= p².

    A missing witness is logged; it is returned as None, or raised as
    FalsifiedLemmaError when strict.
    """
    p = Prime(p)
    target = _check_double_twist_pair(lam, mu, p)
    n = ambient_rank(lam, mu)
    diff = Weight.from_partition(lam, n) - Weight.from_partition(target, n)
    for i in range(1, n):
        if pairing(diff, i) >= p * p:
            return i
    logger.error("no simple root with pairing >= %d for λ=%s, μ=%s, p=%d (pairings %s)",
                 p * p, lam, mu, p, pairing_vector(diff))
    if strict:
        raise FalsifiedLemmaError(f"λ={lam}, μ={mu}, p={p}: every pairing of λ − p²μ is below {p * p}")
    return None


def corollary63_check(lam: Partition, mu: Partition, p: int) -> bool:
    """λ − p²μ − (p−1)ρ is not a weight of St_1."""
    p = Prime(p)
    target = _check_double_twist_pair(lam, mu, p)
    n = ambient_rank(lam, mu)
    gamma = Weight.from_partition(lam, n) - Weight.from_partition(target, n) - rho_multiple(p - 1, n)
    return not steinberg_contains(gamma, p, 1, n)


def single_twist_gamma(lam: Partition, mu: Partition, p: int, power: int = 1) -> Weight:
    """λ − p^power·μ − (p−1)ρ at the ambient rank of λ and μ."""
    p = Prime(p)
    n = ambient_rank(lam, mu)
    target = scale_partition(mu, checked_power(p, power))
    return Weight.from_partition(lam, n) - Weight.from_partition(target, n) - rho_multiple(p - 1, n)

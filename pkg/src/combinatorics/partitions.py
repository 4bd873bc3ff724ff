"""
Partitions, compositions and p-adic digits.

Every value here is immutable; every function is pure. Parts are bounded by
the unsigned 64-bit range and arithmetic that would leave it raises
OverflowBoundError instead of growing silently.

Orders:
- enumerate_partitions: decreasing lexicographic, e.g. (4),(3,1),(2,2),(2,1,1),(1,1,1,1)
- enumerate_compositions: decreasing first part, recursively, e.g. (2,0),(1,1),(0,2)
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import accumulate, zip_longest
from math import comb, factorial, prod
from typing import Iterator, Optional

from sympy import isprime

from src.core.config import DEFAULT_SETTINGS, Settings
from src.core.errors import (
    BoundExceededError,
    InvalidPartitionError,
    InvalidPrimeError,
    OverflowBoundError,
    SizeMismatchError,
)

U64_MAX = 2**64 - 1


def _check_u64(value: int, what: str) -> int:
    if value > U64_MAX:
        raise OverflowBoundError(f"{what} = {value} exceeds the 64-bit range")
    return value


class Prime(int):
    """An odd prime p >= 3. Behaves as a plain int everywhere else."""

    def __new__(cls, value: int):
        if isinstance(value, Prime):
            return value
        if isinstance(value, bool) or int(value) != value:
            raise InvalidPrimeError(f"not an integer: {value!r}")
        value = int(value)
        if value == 2:
            raise InvalidPrimeError("p = 2 is not supported; characteristic must be odd")
        if value < 3 or not isprime(value):
            raise InvalidPrimeError(f"{value} is not an odd prime")
        return super().__new__(cls, value)

    def __repr__(self) -> str:
        return f"Prime({int(self)})"


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts. Trailing zeros are dropped on construction."""
    parts: tuple[int, ...]
    d: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, x in enumerate(parts):
            if x < 0:
                raise InvalidPartitionError(f"negative part {x} in {parts}")
            if x == 0:
                raise InvalidPartitionError(f"zero part inside {parts}")
            _check_u64(x, "part")
            if i and parts[i - 1] < x:
                raise InvalidPartitionError(f"parts not weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "d", _check_u64(sum(parts), "partition size"))

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.parts) + ")"

    def padded(self, n: int) -> tuple[int, ...]:
        if n < len(self.parts):
            raise InvalidPartitionError(f"{self} has more than {n} parts")
        return self.parts + (0,) * (n - len(self.parts))

    def is_row(self) -> bool:
        """True for (d) and for the empty partition."""
        return len(self.parts) <= 1

    def to_json(self) -> list[int]:
        return list(self.parts)


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]
    d: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x < 0 for x in parts):
            raise InvalidPartitionError(f"negative entry in composition {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "d", sum(parts))

    @property
    def n(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def to_json(self) -> dict:
        return {"length": self.n, "parts": list(self.parts)}


@dataclass(frozen=True)
class PAdicDigits:
    digits: tuple[int, ...]  # least significant first
    base: int

    @property
    def value(self) -> int:
        return sum(a * self.base**j for j, a in enumerate(self.digits))

    def digit(self, j: int) -> int:
        return self.digits[j] if j < len(self.digits) else 0

    def __len__(self) -> int:
        return len(self.digits)


class Dominance(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


# =========================
# p-adic arithmetic
# =========================
@lru_cache(maxsize=65536)
def p_adic_digits(t: int, p: int) -> PAdicDigits:
    p = Prime(p)
    if t < 0:
        raise ValueError(f"p_adic_digits needs t >= 0, got {t}")
    digits = []
    while t:
        t, a = divmod(t, p)
        digits.append(a)
    return PAdicDigits(tuple(digits), int(p))


def l_p(t: int, p: int) -> int:
    """Least l >= 0 with t < p**l."""
    p = Prime(p)
    if t < 0:
        raise ValueError(f"l_p needs t >= 0, got {t}")
    l, bound = 0, 1
    while t >= bound:
        l += 1
        bound *= p
    return l


def checked_power(p: int, r: int) -> int:
    if r < 0:
        raise ValueError(f"negative exponent {r}")
    return _check_u64(p**r, f"{p}^{r}")


# =========================
# dominance
# =========================
def dominance_compare(lam: Partition, mu: Partition) -> Dominance:
    if lam.d != mu.d:
        raise SizeMismatchError(f"{lam} partitions {lam.d} but {mu} partitions {mu.d}")
    ge = le = True
    for a, b in zip_longest(accumulate(lam.parts), accumulate(mu.parts), fillvalue=lam.d):
        if a < b:
            ge = False
        elif a > b:
            le = False
        if not ge and not le:
            return Dominance.INCOMPARABLE
    if ge and le:
        return Dominance.EQUAL
    return Dominance.GREATER if ge else Dominance.LESS


def dominates(lam: Partition, mu: Partition) -> bool:
    """lam ⊵ mu."""
    return dominance_compare(lam, mu) in (Dominance.GREATER, Dominance.EQUAL)


def strictly_dominates(lam: Partition, mu: Partition) -> bool:
    """lam ⊳ mu."""
    return dominance_compare(lam, mu) is Dominance.GREATER


# =========================
# constructions
# =========================
def scale_partition(lam: Partition, m: int) -> Partition:
    if m < 1:
        raise ValueError(f"scale factor must be positive, got {m}")
    return Partition(tuple(_check_u64(x * m, "scaled part") for x in lam.parts))


def add_power_to_first_part(lam: Partition, p: int, r: int) -> Partition:
    """(λ₁+p^r, λ₂, ...); the empty partition becomes (p^r)."""
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    q = checked_power(p, r)
    if not lam.parts:
        return Partition((q,))
    return Partition((_check_u64(lam.parts[0] + q, "first part"),) + lam.parts[1:])


def prepend_part(lam: Partition, a: int) -> Partition:
    if lam.parts and a < lam.parts[0]:
        raise InvalidPartitionError(f"cannot prepend {a} to {lam}: {a} < {lam.parts[0]}")
    return Partition((a,) + lam.parts)


def conjugate(lam: Partition) -> Partition:
    if not lam.parts:
        return lam
    return Partition(tuple(sum(1 for x in lam.parts if x > j) for j in range(lam.parts[0])))


def hook_length_dimension(lam: Partition) -> int:
    """Number of standard tableaux of shape lam."""
    conj = conjugate(lam)
    hooks = prod(
        (lam.parts[i] - j - 1) + (conj.parts[j] - i - 1) + 1
        for i in range(len(lam))
        for j in range(lam.parts[i])
    )
    return factorial(lam.d) // hooks


def composition_count(lam: Partition, n: int) -> int:
    """How many length-n compositions rearrange lam padded with zeros."""
    if len(lam) > n:
        return 0
    mult: dict[int, int] = {}
    for x in lam.padded(n):
        mult[x] = mult.get(x, 0) + 1
    return factorial(n) // prod(factorial(m) for m in mult.values())


def is_p_multiple(lam: Partition, p: int) -> bool:
    """lam = p·tau for some partition tau."""
    return all(x % p == 0 for x in lam.parts)


# =========================
# enumeration
# =========================
def _gen_partitions(n: int, max_part: int, slots: Optional[int]) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    if slots == 0:
        return
    rest_slots = None if slots is None else slots - 1
    for first in range(min(n, max_part), 0, -1):
        for tail in _gen_partitions(n - first, first, rest_slots):
            yield (first,) + tail


@lru_cache(maxsize=256)
def _partitions_cached(d: int, max_parts: Optional[int]) -> tuple[Partition, ...]:
    return tuple(Partition(t) for t in _gen_partitions(d, d, max_parts))


def enumerate_partitions(
    d: int,
    max_parts: Optional[int] = None,
    settings: Settings = DEFAULT_SETTINGS,
) -> tuple[Partition, ...]:
    if d < 0:
        raise ValueError(f"d must be >= 0, got {d}")
    if d > settings.max_partition_d:
        raise BoundExceededError("partition enumeration d", d, settings.max_partition_d)
    if max_parts is not None and max_parts < 1:
        raise ValueError(f"max_parts must be positive, got {max_parts}")
    if max_parts is not None and max_parts >= d:
        max_parts = None
    return _partitions_cached(d, max_parts)


def _gen_compositions(d: int, n: int) -> Iterator[tuple[int, ...]]:
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for tail in _gen_compositions(d - first, n - 1):
            yield (first,) + tail


def enumerate_compositions(d: int, n: int, settings: Settings = DEFAULT_SETTINGS) -> tuple[Composition, ...]:
    if d < 0 or n < 1:
        raise ValueError(f"need d >= 0 and n >= 1, got d={d}, n={n}")
    count = comb(d + n - 1, n - 1)
    if count > settings.max_compositions:
        raise BoundExceededError(f"compositions of {d} into {n} parts", count, settings.max_compositions)
    return tuple(Composition(t) for t in _gen_compositions(d, n))


def two_part_partitions(d_max: int, d_min: int = 2) -> Iterator[Partition]:
    """Every (λ1, λ2) with λ1 >= λ2 >= 1 and d_min <= λ1+λ2 <= d_max."""
    for d in range(max(d_min, 2), d_max + 1):
        for l2 in range(1, d // 2 + 1):
            yield Partition((d - l2, l2))


# =========================
# parsing
# =========================
def parse_partition(text: str) -> Partition:
    s = text.strip().strip("()[]")
    if not s:
        return Partition(())
    try:
        parts = tuple(int(x) for x in s.replace(" ", "").split(","))
    except ValueError as e:
        raise InvalidPartitionError(f"cannot parse partition {text!r}") from e
    return Partition(parts)

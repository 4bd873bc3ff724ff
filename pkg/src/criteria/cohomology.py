"""
Closed-form cohomology of Specht modules in odd characteristic.

- H⁰: James' congruences λ_i ≡ −1 mod p^{l_p(λ_{i+1})}.
- H¹ for two-part λ: the Ψ_p(λ1−λ2) membership test and the two-case
  criterion; both routes are kept so they can be compared.
- Transport rules (predict_*) re-label a known dimension under the stability
  theorems; they never compute anything themselves.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from src.combinatorics.partitions import (
    Partition,
    Prime,
    add_power_to_first_part,
    checked_power,
    l_p,
    p_adic_digits,
    prepend_part,
    scale_partition,
)
from src.core.errors import DegreeMismatchError, NotTwoPartError, PreconditionFailedError


class Source(enum.Enum):
    CRITERION = "criterion"
    ORACLE = "oracle"


@dataclass(frozen=True)
class CohomologyResult:
    degree: int
    dim: int
    source: Source
    p: int
    lam: Partition
    witness: Optional[dict] = field(default=None, compare=False)

    def __post_init__(self):
        if self.degree not in (0, 1):
            raise ValueError(f"degree must be 0 or 1, got {self.degree}")
        if self.dim < 0:
            raise ValueError(f"negative dimension {self.dim}")
        if self.source is Source.CRITERION and self.dim > 1:
            if self.degree == 0 or len(self.lam) == 2:
                raise ValueError(f"criterion H^{self.degree} of S^{self.lam} cannot be {self.dim}-dimensional")

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "dim": self.dim,
            "source": self.source.value,
            "p": int(self.p),
            "partition": self.lam.to_json(),
            "witness": self.witness,
        }


@dataclass(frozen=True)
class PsiQuery:
    """r in base p together with the complementary digits r̄_i = p−1−r_i."""
    r: int
    p: int

    def __post_init__(self):
        if self.r < 0:
            raise ValueError(f"r must be >= 0, got {self.r}")

    def digit(self, i: int) -> int:
        return p_adic_digits(self.r, self.p).digit(i)

    def complement(self, i: int) -> int:
        return self.p - 1 - self.digit(i)

    def partial(self, u: int) -> int:
        """Σ_{i<u} r̄_i p^i."""
        return sum(self.complement(i) * self.p**i for i in range(u))


# =========================
# degree 0
# =========================
def james_h0_witness(lam: Partition, p: int) -> list[dict]:
    p = Prime(p)
    rows = []
    for i in range(len(lam) - 1):
        upper, lower = lam.parts[i], lam.parts[i + 1]
        modulus = checked_power(p, l_p(lower, p))
        rows.append({
            "i": i + 1,
            "upper": upper,
            "lower": lower,
            "modulus": modulus,
            "holds": (upper + 1) % modulus == 0,
        })
    return rows


def james_h0(lam: Partition, p: int) -> int:
    return int(all(row["holds"] for row in james_h0_witness(lam, p)))


def h0_result(lam: Partition, p: int) -> CohomologyResult:
    witness = james_h0_witness(lam, p)
    dim = int(all(row["holds"] for row in witness))
    return CohomologyResult(0, dim, Source.CRITERION, int(p), lam, {"congruences": witness})


# =========================
# degree 1, two-part
# =========================
def psi_witness(r: int, x: int, p: int) -> Optional[dict]:
    """Which family of Ψ_p(r) contains x, if any.

    family 1: Σ_{i<u} r̄_i p^i + p^e with e >= u+1
    family 2: Σ_{i<=u} r̄_i p^i
    in both cases r_u != p−1.
    """
    p = Prime(p)
    if x < 0:
        return None
    q = PsiQuery(r, p)
    for u in range(l_p(max(r, x), p) + 2):
        if q.digit(u) == p - 1:
            continue
        base = q.partial(u)
        if x == base + q.complement(u) * p**u:
            return {"family": 2, "u": u}
        rest = x - base
        e = 0
        while rest > 1 and rest % p == 0:
            rest //= p
            e += 1
        if rest == 1 and x > base and e >= u + 1:
            return {"family": 1, "u": u, "exponent": e}
    return None


def psi_contains(r: int, x: int, p: int) -> bool:
    return psi_witness(r, x, p) is not None


def _check_two_part(l1: int, l2: int) -> None:
    if l2 < 1 or l1 < l2:
        raise NotTwoPartError(f"({l1},{l2}) is not a two-part partition with λ1 >= λ2 >= 1")


def h1_twopart_psi(l1: int, l2: int, p: int) -> int:
    _check_two_part(l1, l2)
    return int(psi_contains(l1 - l2, l2, p))


def h1_twopart_criterion_witness(l1: int, l2: int, p: int) -> Optional[dict]:
    p = Prime(p)
    _check_two_part(l1, l2)
    if james_h0(Partition((l1, l2)), p):
        return {"case": "i"}
    # λ1 ≡ −1 mod p^u exactly: only u = v_p(λ1+1) qualifies
    for u in range(l_p(l1, p) + 2):
        pu = p**u
        if (l1 + 1) % pu or (l1 + 1) % (pu * p) == 0:
            continue
        for b in range(u + 1, l_p(l2, p) + 1):
            c = l2 - p**b
            if 0 <= c < pu:
                return {"case": "ii", "u": u, "c": c, "b": b}
    return None


def h1_twopart_criterion(l1: int, l2: int, p: int) -> int:
    return int(h1_twopart_criterion_witness(l1, l2, p) is not None)


def h1_twopart_result(l1: int, l2: int, p: int) -> CohomologyResult:
    """Ψ-route dimension, with the witnesses of both routes attached."""
    _check_two_part(l1, l2)
    psi = psi_witness(l1 - l2, l2, p)
    crit = h1_twopart_criterion_witness(l1, l2, p)
    dim = int(psi is not None)
    witness = {"psi": psi, "criterion": crit, "agree": dim == int(crit is not None)}
    return CohomologyResult(1, dim, Source.CRITERION, int(p), Partition((l1, l2)), witness)


# =========================
# implications and transport rules
# =========================
def andersen_implication(lam: Partition, p: int, h1dim: int) -> bool:
    """H⁰ ≠ 0 and λ ≠ (d) imply H¹ ≠ 0."""
    return james_h0(lam, p) == 0 or lam.is_row() or h1dim > 0


def predict_generic_h1(lam: Partition, p: int, known: CohomologyResult) -> CohomologyResult:
    """H¹(S^{pλ}) carried over to H¹(S^{p²λ})."""
    p = Prime(p)
    if known.degree != 1:
        raise DegreeMismatchError(f"generic transport needs degree 1, got {known.degree}")
    source_shape = scale_partition(lam, p)
    if known.lam != source_shape:
        raise PreconditionFailedError(f"known result is for {known.lam}, expected {source_shape}")
    return CohomologyResult(1, known.dim, Source.CRITERION, int(p), scale_partition(lam, p * p),
                            {"rule": "generic", "from": source_shape.to_json()})


def predict_shift_h1(lam: Partition, p: int, r: int, known: CohomologyResult) -> CohomologyResult:
    """H¹(S^λ) carried over to H¹(S^{λ+p^r}) when p^r > |λ|."""
    p = Prime(p)
    q = checked_power(p, r)
    if q <= lam.d:
        raise PreconditionFailedError(f"need p^r > |λ|, got {p}^{r} = {q} <= {lam.d}")
    if known.degree != 1:
        raise DegreeMismatchError(f"shift transport needs degree 1, got {known.degree}")
    if known.lam != lam:
        raise PreconditionFailedError(f"known result is for {known.lam}, expected {lam}")
    return CohomologyResult(1, known.dim, Source.CRITERION, int(p), add_power_to_first_part(lam, p, r),
                            {"rule": "shift", "from": lam.to_json(), "r": r})


def first_row_admissible(lam: Partition, p: int, a: int) -> bool:
    first = lam.parts[0] if lam.parts else 0
    return a >= max(first, 1) and (a + 1) % checked_power(p, l_p(first, p)) == 0


def predict_first_row_h0(lam: Partition, p: int, a: int, known: CohomologyResult) -> CohomologyResult:
    """H⁰(S^λ) carried over to H⁰(S^{(a,λ1,λ2,...)}) for a ≡ −1 mod p^{l_p(λ1)}."""
    p = Prime(p)
    if not first_row_admissible(lam, p, a):
        raise PreconditionFailedError(f"cannot put a row of length {a} on top of {lam} at p={p}")
    if known.degree != 0:
        raise DegreeMismatchError(f"first-row transport needs degree 0, got {known.degree}")
    if known.lam != lam:
        raise PreconditionFailedError(f"known result is for {known.lam}, expected {lam}")
    return CohomologyResult(0, known.dim, Source.CRITERION, int(p), prepend_part(lam, a),
                            {"rule": "first_row", "from": lam.to_json(), "a": a})


def admissible_first_rows(lam: Partition, p: int, count: int = 2) -> list[int]:
    """The `count` smallest a admitted by predict_first_row_h0."""
    first = lam.parts[0] if lam.parts else 0
    modulus = checked_power(p, l_p(first, p))
    a = modulus - 1
    while a < max(first, 1):
        a += modulus
    return [a + k * modulus for k in range(count)]

from math import comb, factorial

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import npartitions

from src.combinatorics.partitions import (
    Dominance,
    Partition,
    Prime,
    add_power_to_first_part,
    checked_power,
    composition_count,
    conjugate,
    dominance_compare,
    dominates,
    enumerate_compositions,
    enumerate_partitions,
    hook_length_dimension,
    is_p_multiple,
    l_p,
    p_adic_digits,
    parse_partition,
    prepend_part,
    scale_partition,
    strictly_dominates,
    two_part_partitions,
)
from src.core.config import DEFAULT_SETTINGS
from src.core.errors import (
    BoundExceededError,
    InvalidPartitionError,
    InvalidPrimeError,
    OverflowBoundError,
    SizeMismatchError,
)
from tests.property.settings import STANDARD_SETTINGS
from tests.property.strategies import partitions, small_primes

P = Partition.of


# ===== primes =====
@pytest.mark.parametrize("value", [3, 5, 7, 101])
def test_prime_accepts_odd_primes(value):
    assert Prime(value) == value
    assert isinstance(Prime(value), int)


@pytest.mark.parametrize("value", [2, 1, 0, -3, 9, 15, True, 3.5])
def test_prime_rejects(value):
    with pytest.raises(InvalidPrimeError):
        Prime(value)


# ===== partitions =====
def test_partition_normalises_trailing_zeros():
    lam = Partition((3, 1, 0, 0))
    assert lam.parts == (3, 1)
    assert lam.d == 4
    assert lam == P(3, 1)
    assert str(P(20, 5)) == "(20,5)"
    assert P(2, 1).padded(4) == (2, 1, 0, 0)


@pytest.mark.parametrize("parts", [(1, 2), (2, 0, 1), (3, -1)])
def test_partition_rejects(parts):
    with pytest.raises(InvalidPartitionError):
        Partition(parts)


def test_partition_part_overflow():
    with pytest.raises(OverflowBoundError):
        Partition((2**64,))


def test_is_row():
    assert P(5).is_row()
    assert Partition(()).is_row()
    assert not P(4, 1).is_row()


# ===== p-adic =====
def test_p_adic_digits():
    digits = p_adic_digits(25, 5)
    assert digits.digits == (0, 0, 1)
    assert digits.value == 25
    assert digits.digit(7) == 0
    assert p_adic_digits(0, 3).digits == ()
    assert p_adic_digits(5, 3).digits == (2, 1)
    assert p_adic_digits(20, 5).digits == (0, 4)


@pytest.mark.parametrize("t,p,expected", [(0, 3, 0), (1, 3, 1), (2, 3, 1), (3, 3, 2), (8, 3, 2), (9, 3, 3), (25, 5, 3), (5, 5, 2)])
def test_l_p(t, p, expected):
    assert l_p(t, p) == expected


@given(t=st.integers(0, 10**6), p=small_primes)
@STANDARD_SETTINGS
def test_p_adic_digits_reconstruct(t, p):
    digits = p_adic_digits(t, p)
    assert all(0 <= a < p for a in digits.digits)
    assert sum(a * p**i for i, a in enumerate(digits.digits)) == t
    assert digits.value == t


@pytest.mark.parametrize("p", [0, 1, 2, 4, 9])
def test_p_adic_helpers_reject_bad_p(p):
    with pytest.raises(InvalidPrimeError):
        p_adic_digits(5, p)
    with pytest.raises(InvalidPrimeError):
        l_p(5, p)


@given(t=st.integers(0, 10**9), p=small_primes)
@STANDARD_SETTINGS
def test_l_p_is_least_exponent(t, p):
    l = l_p(t, p)
    assert t < p**l
    assert l == 0 or t >= p ** (l - 1)
    assert len(p_adic_digits(t, p)) == l


def test_checked_power():
    assert checked_power(2, 63) == 2**63
    with pytest.raises(OverflowBoundError):
        checked_power(2, 64)
    with pytest.raises(ValueError):
        checked_power(3, -1)


# ===== dominance =====
@pytest.mark.parametrize(
    "lam,mu,expected",
    [
        (P(3, 1), P(2, 2), Dominance.GREATER),
        (P(2, 2), P(3, 1), Dominance.LESS),
        (P(2, 2), P(2, 2), Dominance.EQUAL),
        (P(3, 1, 1, 1), P(2, 2, 2), Dominance.INCOMPARABLE),
        (P(3, 3), P(4, 1, 1), Dominance.INCOMPARABLE),
        (P(6), P(1, 1, 1, 1, 1, 1), Dominance.GREATER),
    ],
)
def test_dominance_compare(lam, mu, expected):
    assert dominance_compare(lam, mu) is expected


@pytest.mark.parametrize("d", range(1, 13))
def test_dominance_is_a_partial_order(d):
    shapes = enumerate_partitions(d)
    ge = np.array([[dominates(a, b) for b in shapes] for a in shapes])
    assert ge.diagonal().all()
    # antisymmetry: a ⊵ b and b ⊵ a only on the diagonal
    assert np.array_equal(ge & ge.T, np.eye(len(shapes), dtype=bool))
    # transitivity: a ⊵ b ⊵ c forces a ⊵ c
    two_step = (ge.astype(np.int64) @ ge.astype(np.int64)) > 0
    assert not (two_step & ~ge).any()


def test_dominance_size_mismatch():
    with pytest.raises(SizeMismatchError):
        dominance_compare(P(3), P(2))


@given(lam=partitions(max_part=6, max_len=5))
@STANDARD_SETTINGS
def test_dominance_between_row_and_column(lam):
    assert dominates(Partition((lam.d,)), lam)
    assert dominates(lam, Partition((1,) * lam.d))
    assert not strictly_dominates(lam, lam)


@given(data=st.data(), d=st.integers(1, 10), m=st.integers(1, 6))
@STANDARD_SETTINGS
def test_dominance_survives_scaling(data, d, m):
    shapes = enumerate_partitions(d)
    lam = data.draw(st.sampled_from(shapes))
    mu = data.draw(st.sampled_from(shapes))
    assert dominance_compare(scale_partition(lam, m), scale_partition(mu, m)) is dominance_compare(lam, mu)


# ===== constructions =====
def test_constructions():
    assert scale_partition(P(2, 1), 3) == P(6, 3)
    assert add_power_to_first_part(P(2, 1), 3, 2) == P(11, 1)
    assert add_power_to_first_part(Partition(()), 3, 2) == P(9)
    assert add_power_to_first_part(P(20, 5), 5, 2) == P(45, 5)
    with pytest.raises(ValueError):
        add_power_to_first_part(P(2, 1), 3, 0)
    assert scale_partition(Partition(()), 5) == Partition(())
    assert prepend_part(P(3, 1), 5) == P(5, 3, 1)
    with pytest.raises(InvalidPartitionError):
        prepend_part(P(3, 1), 2)
    assert conjugate(P(3, 1)) == P(2, 1, 1)
    assert is_p_multiple(P(6, 3), 3)
    assert not is_p_multiple(P(6, 4), 3)


@given(lam=partitions())
@STANDARD_SETTINGS
def test_conjugate_is_an_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).d == lam.d


@pytest.mark.parametrize("lam,expected", [(P(2, 1), 2), (P(2, 2), 2), (P(3, 2), 5), (P(3, 3), 5), (P(4, 2, 1), 35)])
def test_hook_length_dimension(lam, expected):
    assert hook_length_dimension(lam) == expected


@pytest.mark.parametrize("d", range(1, 8))
def test_hook_lengths_square_sum(d):
    assert sum(hook_length_dimension(lam) ** 2 for lam in enumerate_partitions(d)) == factorial(d)


def test_composition_count():
    assert composition_count(P(2, 1), 3) == 6
    assert composition_count(P(1, 1), 3) == 3
    assert composition_count(P(2, 1, 1), 2) == 0


# ===== enumeration =====
def test_enumerate_partitions_order():
    assert [lam.parts for lam in enumerate_partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [lam.parts for lam in enumerate_partitions(4, max_parts=2)] == [(4,), (3, 1), (2, 2)]
    assert enumerate_partitions(0) == (Partition(()),)


def test_partition_counts():
    counts = [len(enumerate_partitions(d)) for d in range(11)]
    assert counts == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert len(enumerate_partitions(30)) == 5604


@pytest.mark.parametrize("d", range(31))
def test_partition_counts_match_sympy(d):
    assert len(enumerate_partitions(d)) == npartitions(d)


def test_enumerate_partitions_bound():
    with pytest.raises(BoundExceededError):
        enumerate_partitions(6, settings=DEFAULT_SETTINGS.with_overrides({"partitions": 5}))


def test_enumerate_compositions():
    assert [c.parts for c in enumerate_compositions(2, 2)] == [(2, 0), (1, 1), (0, 2)]
    assert [c.parts for c in enumerate_compositions(0, 3)] == [(0, 0, 0)]
    assert len(enumerate_compositions(4, 3)) == 15
    with pytest.raises(BoundExceededError):
        enumerate_compositions(10, 10, DEFAULT_SETTINGS.with_overrides({"compositions": 100}))


@given(d=st.integers(0, 8), n=st.integers(1, 4))
@STANDARD_SETTINGS
def test_composition_totals(d, n):
    comps = enumerate_compositions(d, n)
    assert len(comps) == comb(d + n - 1, n - 1)
    assert all(c.d == d and c.n == n for c in comps)
    assert sum(composition_count(lam, n) for lam in enumerate_partitions(d, max_parts=n)) == len(comps)


def test_two_part_partitions():
    assert [lam.parts for lam in two_part_partitions(4)] == [(1, 1), (2, 1), (3, 1), (2, 2)]
    for d in range(0, 15):
        expected = [lam for lam in enumerate_partitions(d, max_parts=2) if len(lam) == 2]
        assert list(two_part_partitions(d, d)) == expected


# ===== parsing =====
@pytest.mark.parametrize("text,expected", [("20,5", P(20, 5)), ("(20, 5)", P(20, 5)), ("[3]", P(3)), ("", Partition(()))])
def test_parse_partition(text, expected):
    assert parse_partition(text) == expected


@pytest.mark.parametrize("text", ["a,b", "1,2", "3,,1"])
def test_parse_partition_rejects(text):
    with pytest.raises(InvalidPartitionError):
        parse_partition(text)

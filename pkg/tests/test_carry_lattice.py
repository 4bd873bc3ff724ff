from collections import Counter
from math import comb

import networkx as nx
import pytest
from hypothesis import given

from src.carry.lattice import (
    ZERO_PATTERN,
    CarryPattern,
    carry_pattern,
    carry_poset,
    column_addition,
    h0_composition_factors,
    hom_b_via_carry,
    is_h0_factor,
    shift_factor_check,
    submodule_lattice,
    twist_multiplicity_equal,
)
from src.combinatorics.partitions import Partition, enumerate_compositions, enumerate_partitions
from src.core.config import DEFAULT_SETTINGS
from src.core.errors import BoundExceededError, PreconditionFailedError
from src.criteria.cohomology import james_h0
from tests.property.settings import STANDARD_SETTINGS
from tests.property.strategies import partitions, small_primes

P = Partition.of


def test_carry_pattern_example():
    assert carry_pattern((5, 5, 2), 3) == CarryPattern((2, 1))
    digits, carries = column_addition((5, 5, 2), 3)
    assert digits == (0, 1, 1)
    assert carries == (2, 1, 0)
    assert carry_pattern((24, 1), 5) == CarryPattern((1, 1))


def test_no_carry_is_zero_pattern():
    assert carry_pattern((1, 1), 5) == ZERO_PATTERN
    assert carry_pattern((), 3) == ZERO_PATTERN


def test_carry_pattern_order():
    assert CarryPattern((1, 0, 0)).carries == (1,)
    assert CarryPattern((1,)).leq(CarryPattern((1, 1)))
    assert CarryPattern((1,)).strictly_less(CarryPattern((2,)))
    assert not CarryPattern((2, 0)).leq(CarryPattern((0, 1)))
    assert not CarryPattern((1,)).strictly_less(CarryPattern((1,)))


@given(beta=partitions(max_part=40, max_len=5), p=small_primes)
@STANDARD_SETTINGS
def test_column_addition_sums(beta, p):
    digits, carries = column_addition(beta.parts, p)
    assert sum(a * p**j for j, a in enumerate(digits)) == beta.d
    # the total number of carries measures the drop in digit sum
    digit_sum = sum(sum(divmod_digits(x, p)) for x in beta.parts)
    assert digit_sum - sum(digits) == (p - 1) * sum(carries)


def divmod_digits(x, p):
    out = []
    while x:
        x, a = divmod(x, p)
        out.append(a)
    return out


@pytest.mark.parametrize(
    "lam,p,expected",
    [(P(20, 5), 5, True), (P(3, 1), 3, False), (P(2, 2), 3, True), (P(7), 3, True), (Partition(()), 3, True)],
)
def test_is_h0_factor(lam, p, expected):
    assert is_h0_factor(lam, p) is expected


def test_hom_b_examples():
    assert hom_b_via_carry(P(20, 5), 5) == 0
    assert hom_b_via_carry(P(2, 2), 3) == 1
    assert hom_b_via_carry(P(3, 1), 3) == 0


@pytest.mark.parametrize("p", [3, 5])
@pytest.mark.parametrize("d", range(0, 11))
def test_hom_b_matches_james(p, d):
    for lam in enumerate_partitions(d):
        assert hom_b_via_carry(lam, p) == james_h0(lam, p), lam


@pytest.mark.parametrize("p,d,n", [(3, 4, 3), (3, 6, 3), (5, 7, 2), (3, 5, 4), (5, 6, 3)])
def test_class_sizes_match_brute_force(p, d, n):
    poset = carry_poset(d, n, p)
    brute = Counter(carry_pattern(beta.parts, p) for beta in enumerate_compositions(d, n))
    assert dict(brute) == poset.class_sizes
    assert sum(poset.class_sizes.values()) == comb(d + n - 1, n - 1)


def test_factors_d4_p3():
    assert h0_composition_factors(4, 4, 3) == {ZERO_PATTERN: P(4), CarryPattern((1,)): P(2, 2)}


def test_factors_d25_p5():
    factors = h0_composition_factors(25, 25, 5)
    assert factors[CarryPattern((0, 1))] == P(20, 5)
    assert factors[CarryPattern((1, 1))] == P(24, 1)
    assert factors[ZERO_PATTERN] == P(25)


@pytest.mark.parametrize("d,p", [(1, 3), (2, 3), (4, 5), (6, 7)])
def test_below_p_only_the_row(d, p):
    assert h0_composition_factors(d, d, p) == {ZERO_PATTERN: P(d)}


def test_below_p_lattice_is_a_single_step():
    poset = carry_poset(2, 2, 3)
    assert poset.patterns == (ZERO_PATTERN,)
    assert poset.cover_edges == ()
    lattice = submodule_lattice(2, 2, 3)
    assert [node.dimension for node in lattice.nodes] == [0, 3]


@pytest.mark.parametrize("p", [3, 5, 7])
@pytest.mark.parametrize("d", range(0, 13))
def test_factors_agree_with_digit_test(p, d):
    n = max(d, 1)
    factors = h0_composition_factors(d, n, p)
    expected = {lam for lam in enumerate_partitions(d) if is_h0_factor(lam, p)}
    assert set(factors.values()) == expected
    assert len(set(factors.values())) == len(factors)


def test_poset_is_a_dag_of_cover_relations():
    poset = carry_poset(9, 9, 3)
    g = poset.graph
    assert nx.is_directed_acyclic_graph(g)
    for a, b in poset.cover_edges:
        assert a.strictly_less(b)
    assert poset.lower_covers(poset.patterns[0]) == ()


def test_lattice_d4_p3_is_a_chain():
    lattice = submodule_lattice(4, 4, 3)
    assert [node.dimension for node in lattice.nodes] == [0, 16, 35]
    assert lattice.bottom.ideal == ()
    assert lattice.top.factors == (P(4), P(2, 2))
    assert [(e.lower, e.upper, e.factor) for e in lattice.edges] == [(0, 1, P(4)), (1, 2, P(2, 2))]
    assert lattice.closed_under_meet_and_join()


def test_lattice_d0_is_a_single_step():
    lattice = submodule_lattice(0, 1, 3)
    assert len(lattice.nodes) == 2
    assert lattice.top.dimension == 1
    assert lattice.top.factors == (Partition(()),)


@pytest.mark.parametrize("p,d", [(3, 6), (3, 9), (5, 10), (7, 14)])
def test_lattice_top_and_closure(p, d):
    lattice = submodule_lattice(d, d, p)
    assert lattice.top.dimension == comb(2 * d - 1, d - 1)
    assert lattice.closed_under_meet_and_join()
    assert len(lattice.top.ideal) == len(lattice.poset.patterns)


def test_lattice_ideal_bound():
    with pytest.raises(BoundExceededError):
        submodule_lattice(4, 4, 3, DEFAULT_SETTINGS.with_overrides({"ideals": 1}))


@pytest.mark.parametrize("d", range(1, 9))
def test_twist_multiplicity(d):
    assert all(twist_multiplicity_equal(lam, 3) for lam in enumerate_partitions(d))


def test_shift_factor_check():
    assert shift_factor_check(2, 3, 1)
    assert shift_factor_check(4, 5, 1)
    with pytest.raises(PreconditionFailedError):
        shift_factor_check(3, 3, 1)

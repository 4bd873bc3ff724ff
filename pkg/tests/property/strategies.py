"""Hypothesis strategies for partitions, primes and small weights."""

from hypothesis import strategies as st

from src.combinatorics.partitions import Partition

small_primes = st.sampled_from([3, 5, 7])


def partitions(max_part: int = 10, max_len: int = 6, min_len: int = 0):
    return st.lists(st.integers(1, max_part), min_size=min_len, max_size=max_len).map(
        lambda xs: Partition(tuple(sorted(xs, reverse=True)))
    )


@st.composite
def two_part(draw, max_second: int = 200, max_gap: int = 400):
    l2 = draw(st.integers(1, max_second))
    l1 = l2 + draw(st.integers(0, max_gap))
    return l1, l2

from itertools import product
from math import prod

import pytest

from pvalg import algebra, table_algebra
from pvalg.algebras import (
    associated,
    chain_algebra,
    chain_direct_sum,
    compositions,
    count_chain_modules,
    count_prehomogeneous_modules,
    enumerate_partition_count,
    local_algebra_count,
    orbit_count,
    partition_count,
    residue_split_algebra,
    unit_hyperplanes,
)
from pvalg.core import linalg
from pvalg.core.errors import ParameterError


class TestOrbitCount:
    def test_field_has_two_orbits(self):
        assert orbit_count(table_algebra(1)) == 2

    def test_chain_algebra(self):
        assert orbit_count(table_algebra(3)) == 4

    def test_product_over_summands(self):
        assert orbit_count(algebra("K[x1]/(x1^2-1)")) == 4
        assert orbit_count(residue_split_algebra([(0, 2), (1, 1)])) == 6

    @pytest.mark.parametrize("k", [4, 6, 20, 42])
    def test_non_chain_summand_gives_infinitely_many(self, k):
        assert orbit_count(table_algebra(k)) is None


def test_chain_algebra_rejects_zero():
    with pytest.raises(ParameterError):
        chain_algebra(0)


def test_chain_direct_sum_dimension():
    a = chain_direct_sum([2, 1, 3])
    assert a.dim == 6
    assert orbit_count(a) == 3 * 2 * 4


def test_residue_split_rejects_repeated_roots():
    with pytest.raises(ParameterError, match="distinct"):
        residue_split_algebra([(1, 1), (1, 2)])


def test_compositions():
    assert list(compositions(4, 2)) == [(1, 3), (2, 2), (3, 1)]
    assert list(compositions(3, 3)) == [(1, 1, 1)]
    assert list(compositions(2, 3)) == []


@pytest.mark.parametrize("n", range(1, 9))
def test_partition_counts_agree(n):
    for r in range(1, n + 1):
        assert partition_count(n, r) == enumerate_partition_count(n, r)


def test_partition_count_values():
    assert partition_count(4, 2) == 2
    assert partition_count(6, 3) == 3
    assert partition_count(8, 3) == 5


CHAIN_GRID = [pytest.param(n, r, marks=pytest.mark.slow if n >= 6 else ()) for n in range(1, 9) for r in range(1, n + 1)]


@pytest.mark.parametrize("n, r", CHAIN_GRID)
def test_chain_modules_match_partitions(n, r):
    assert count_chain_modules(n, r) == partition_count(n, r) == enumerate_partition_count(n, r)


def _association_classes(a):
    """Count classes of elements with coordinates in -2..2 under multiplication by units."""
    forms = unit_hyperplanes(a)
    buckets = {}
    for coords in product(range(-2, 3), repeat=a.dim):
        x = linalg.vector(coords)
        # the principal ideal dimension is constant on a class, so only compare within a bucket
        bucket = buckets.setdefault(linalg.rank(a.mult_operator(x)), [])
        if not any(associated(a, rep, x, forms) for rep in bucket):
            bucket.append(x)
    return sum(len(bucket) for bucket in buckets.values())


SMALL_COMPOSITIONS = [parts for n in range(1, 5) for r in range(1, n + 1) for parts in compositions(n, r)]


@pytest.mark.slow
@pytest.mark.parametrize("parts", SMALL_COMPOSITIONS, ids=str)
def test_orbit_count_matches_association_classes(parts):
    a = chain_direct_sum(parts)
    expected = prod(k + 1 for k in parts)
    assert orbit_count(a) == expected
    assert _association_classes(a) == expected


def test_local_algebra_count():
    assert [local_algebra_count(n) for n in range(1, 7)] == [1, 1, 2, 4, 9, 25]
    assert local_algebra_count(7) is None
    with pytest.raises(ParameterError):
        local_algebra_count(0)


class TestPrehomogeneousModuleCount:
    def test_small_cases(self):
        assert count_prehomogeneous_modules(1, 1) == 1
        assert count_prehomogeneous_modules(2, 2) == 1
        assert count_prehomogeneous_modules(3, 1) == 2

    def test_multisets_of_equal_dimensions(self):
        # 3+1 gives 2*1, 2+2 gives one multiset
        assert count_prehomogeneous_modules(4, 2) == 3
        # 3+3 picks a multiset of size two from the two local algebras of dimension 3
        assert count_prehomogeneous_modules(6, 2) == 9 + 4 + 3
        assert count_prehomogeneous_modules(7, 2) == 25 + 9 + 8

    def test_infinite_beyond_corank_five(self):
        assert count_prehomogeneous_modules(7, 1) is None

    def test_rank_out_of_range(self):
        with pytest.raises(ParameterError):
            count_prehomogeneous_modules(3, 4)

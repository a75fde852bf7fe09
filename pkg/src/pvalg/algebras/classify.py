"""Orbit counts and the counting corollaries of the classification.

* :func:`orbit_count` counts ``G(A)``-orbits on ``A`` (association classes).
* :func:`count_chain_modules` counts direct sums of chain algebras and matches
  the partition count ``p_r(n)``.
* :func:`count_prehomogeneous_modules` counts isomorphy classes of
  prehomogeneous modules of rank ``r`` from the table.
"""

from collections import Counter
from itertools import combinations
from math import comb, prod
from typing import Iterator, Optional, Sequence, Tuple

from sympy.functions.combinatorial.numbers import nT
from sympy.utilities.iterables import partitions

from ..core import linalg
from ..core.config import DEFAULT_CONFIG, RunConfig
from ..core.errors import ParameterError
from ..core.rationals import as_fraction
from ..polyring import Polynomial
from ..presentations import Presentation, load_table
from .finite import FiniteAlgebra, direct_sum, from_quotient
from .invariants import is_chain
from .structure import local_decomposition

LARGEST_FINITE_DIM = 6


def orbit_count(a: FiniteAlgebra, config: RunConfig = DEFAULT_CONFIG) -> Optional[int]:
    """Number of ``G(A)``-orbits on ``A``; ``None`` when there are infinitely many.

    Finite exactly when every local summand is a chain algebra ``K[x]/(x^k)``;
    a chain summand of dimension ``k`` has ``k + 1`` classes.
    """
    total = 1
    for summand in local_decomposition(a, config).summands:
        if not is_chain(summand):
            return None
        total *= summand.dim + 1
    return total


def chain_algebra(k: int) -> FiniteAlgebra:
    """``K[x1]/(x1^k)`` in the basis ``1, x1, ..., x1^(k-1)``."""
    if k < 1:
        raise ParameterError(f"chain algebra dimension must be positive (got {k})")
    labels = ["1", "x1"] + [f"x1^{i}" for i in range(2, k)]
    structure = tuple(tuple(linalg.unit_vector(k, i + j) if i + j < k else linalg.zeros(1, k)[0] for j in range(k)) for i in range(k))
    return FiniteAlgebra(k, tuple(labels[:k]), structure, linalg.unit_vector(k, 0))


def chain_direct_sum(dims: Sequence[int]) -> FiniteAlgebra:
    """Direct sum of chain algebras of the given dimensions."""
    return direct_sum([chain_algebra(k) for k in dims])


def residue_split_algebra(roots: Sequence[Tuple[object, int]]) -> FiniteAlgebra:
    """``K[x1]/(prod (x1 - c_i)^(n_i))`` for distinct rationals ``c_i``."""
    if not roots:
        raise ParameterError("at least one root is required")
    values = [as_fraction(c) for c, _ in roots]
    if len(set(values)) != len(values):
        raise ParameterError("roots must be distinct")
    variables = ("x1",)
    x = Polynomial.gen(variables, "x1")
    f = Polynomial.one(variables)
    for c, (_, mult) in zip(values, roots):
        if mult < 1:
            raise ParameterError(f"multiplicities must be positive (got {mult})")
        f = f * (x - c) ** mult
    return from_quotient(Presentation(variables, (f,)))


def compositions(n: int, r: int) -> Iterator[Tuple[int, ...]]:
    """Ordered ways of writing ``n`` as ``r`` positive parts, via cut points."""
    for cuts in combinations(range(1, n), r - 1):
        bounds = (0,) + cuts + (n,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(r))


def partition_count(n: int, r: int) -> int:
    """``p_r(n)``: partitions of ``n`` into exactly ``r`` positive parts."""
    return int(nT(n, r))


def enumerate_partition_count(n: int, r: int) -> int:
    """``p_r(n)`` by direct enumeration, as a cross-check of :func:`partition_count`."""
    return sum(1 for p in partitions(n, m=r) if sum(p.values()) == r)


def count_chain_modules(n: int, r: int, config: RunConfig = DEFAULT_CONFIG) -> int:
    """Distinct direct sums of ``r`` chain algebras of total dimension ``n``.

    Every composition is built as an algebra and decomposed again; algebras
    are identified by the multiset of summand dimensions the decomposition
    recovers.
    """
    classes = set()
    for parts in compositions(n, r):
        dec = local_decomposition(chain_direct_sum(parts), config)
        if not all(is_chain(s) for s in dec.summands):
            raise ValueError(f"decomposition of {parts} produced a non-chain summand")
        classes.add(tuple(sorted(dec.dims)))
    return len(classes)


def local_algebra_count(n: int) -> Optional[int]:
    """Number of local algebras of dimension ``n``; ``None`` (infinitely many) for ``n >= 7``."""
    if n < 1:
        raise ParameterError(f"dimension must be positive (got {n})")
    if n > LARGEST_FINITE_DIM:
        return None
    return Counter(entry.declared_dim for entry in load_table())[n]


def count_prehomogeneous_modules(n: int, r: int) -> Optional[int]:
    """Isomorphy classes of prehomogeneous modules of a commutative ``n``-dimensional group of rank ``r``.

    Each module is a multiset of local algebras whose dimensions partition
    ``n`` into ``r`` parts. ``None`` when the corank ``n - r`` exceeds 5.
    """
    if not 1 <= r <= n:
        raise ParameterError(f"rank must satisfy 1 <= r <= n (got n={n}, r={r})")
    if n - r + 1 > LARGEST_FINITE_DIM:
        return None
    total = 0
    for p in partitions(n, m=r):
        if sum(p.values()) != r:
            continue
        total += prod(comb(local_algebra_count(d) + k - 1, k) for d, k in p.items())
    return total

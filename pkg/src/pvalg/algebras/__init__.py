"""Finite-dimensional commutative algebras: structure, decomposition, invariants, counting."""

from .classify import (
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
)
from .finite import (
    AxiomReport,
    FiniteAlgebra,
    algebra_from_model,
    algebra_to_model,
    change_basis,
    direct_sum,
    from_quotient,
    from_structure,
    mult_operator,
    permute_basis,
    try_inverse,
    verify_axioms,
)
from .invariants import (
    Fingerprint,
    Inconclusive,
    Separation,
    ann_filtration,
    certify_nonisomorphic,
    fingerprint,
    hilbert_function,
    is_chain,
    is_square_zero_radical,
    socle,
    verify_separation,
)
from .structure import LocalDecomposition, associated, is_geometrically_local, local_decomposition, nilradical, unit_hyperplanes

__all__ = [
    "AxiomReport",
    "FiniteAlgebra",
    "Fingerprint",
    "Inconclusive",
    "LocalDecomposition",
    "Separation",
    "algebra_from_model",
    "algebra_to_model",
    "ann_filtration",
    "associated",
    "certify_nonisomorphic",
    "chain_algebra",
    "chain_direct_sum",
    "change_basis",
    "compositions",
    "count_chain_modules",
    "count_prehomogeneous_modules",
    "direct_sum",
    "enumerate_partition_count",
    "fingerprint",
    "from_quotient",
    "from_structure",
    "hilbert_function",
    "is_chain",
    "is_geometrically_local",
    "is_square_zero_radical",
    "local_algebra_count",
    "local_decomposition",
    "mult_operator",
    "nilradical",
    "orbit_count",
    "partition_count",
    "permute_basis",
    "residue_split_algebra",
    "socle",
    "try_inverse",
    "unit_hyperplanes",
    "verify_axioms",
    "verify_separation",
]

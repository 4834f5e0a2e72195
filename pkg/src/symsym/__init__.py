"""Exact-arithmetic tools for symplectic symmetric triples of Lie algebras."""

from .liealg import (
    JacobiReport,
    LieAlgebra,
    LieAlgebraError,
    abelian,
    bracket,
    center,
    centralizer,
    change_of_basis,
    derived_series,
    direct_sum,
    from_table,
    invariant_closure,
    jacobi_check,
    killing_form,
    lower_central_series,
    radical,
    restrict,
)
from .triple import (
    SymmetricTriple,
    TripleError,
    TripleFingerprint,
    TwoCochain,
    ValidationReport,
    coboundary,
    cocycle_check,
    curvature,
    direct_sum_triples,
    exactness,
    extend_omega,
    fingerprint,
    heisenberg_extension,
    radical_part,
    split_sigma,
    transport_triple,
    validate_tss,
)

__version__ = "0.1.0"

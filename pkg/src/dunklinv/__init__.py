"""Exact computational toolkit: Dunkl operators, Weyl invariants, Takiff restriction."""

from .exactalg import (
    DimensionMismatch,
    NotDivisible,
    ParseError,
    Polynomial,
    exact_divide,
    parse,
    render,
)
from .linalg import GradedSubspace
from .rootsys import (
    MultiplicityAssignment,
    RootSystem,
    UnsupportedSystem,
    WeylGroup,
    act,
    build_root_system,
    generate_weyl,
    invariant_basis,
    reynolds,
    root_system,
)
from .dunkl import (
    DunklContext,
    adjointness_check,
    commutator_check,
    dunkl_apply,
    dunkl_compose,
    dunkl_pairing,
    equivariance_check,
    gram_matrix,
    invariant_stability_check,
    make_context,
)
from .liealg import (
    LieAlgebra,
    TakiffAlgebra,
    WorkBoundExceeded,
    adjoint_derivation,
    delta_derivation,
    invariant_dimension_series,
    invariants_graded,
    make_sl,
    takiff_extend,
)
from .restriction import (
    CartanFrame,
    ChevalleyReport,
    CriterionReport,
    chevalley_graded_check,
    criterion_check,
    criterion_subspace,
    image_basis,
    restrict,
)

__all__ = [name for name in dir() if not name.startswith("_")]

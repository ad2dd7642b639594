"""Exact computer algebra for Lie-Yamaguti algebras.

Structures over QQ or GF(p), axiom checkers with witnesses, the
(2n, 2n+1) cochain complex and its cohomology, finite group actions with
equivariant cohomology, and order-by-order formal deformations.
"""

from .errors import (
    LyaError,
    FieldMismatchError,
    DimensionError,
    ManifestError,
    UnverifiedError,
    UnsupportedConfigurationError,
    ContainmentError,
    VerificationError,
    IncompatibleRepresentationError,
    CocycleError,
    ClosureError,
)
from .fields import (
    Field,
    GF,
    QQ,
    field_of,
)
from .linalg import (
    Matrix,
    rref,
    rank,
    nullspace,
    image,
    solve,
    Subspace,
    complement_in,
    quotient_dim,
)
from .algebra import (
    CheckReport,
    LyAlgebra,
    require_verified,
    check_lya,
    Representation,
    adjoint_rep,
    check_representation,
    LeibnizAlgebra,
    check_leibniz,
    leibniz_to_lya,
    LinearMapCandidate,
    check_morphism,
)
from .cochains import (
    CochainSpace,
    Cochain,
    evaluate,
    CochainPair,
    pair_spaces,
    CoboundaryOperator,
    coboundary_operator,
    delta_general,
    delta1,
    delta23,
    CohomologyResult,
    cohomology,
    same_class,
    compare_cocycle_spaces,
)
from .equivariant import (
    FiniteGroup,
    check_group,
    GroupAction,
    check_action,
    FixedSubalgebra,
    fixed_subalgebra,
    EquivariantModuleAction,
    check_equivariant_compat,
    induced_action,
    equivariant_subspace,
    equivariant_cohomology,
)
from .deformation import (
    DeformationJet,
    IsomorphismJet,
    compose,
    JetReport,
    check_jet,
    infinitesimal,
    gauge_transform,
    equivalent_first_order,
    check_equivariant_jet,
    Trivialization,
    trivialize,
    RigidityReport,
    rigidity_probe,
)
from .manifest import (
    Manifest,
    load,
    loads,
    dumps,
)

__all__ = [
    "LyaError",
    "FieldMismatchError",
    "DimensionError",
    "ManifestError",
    "UnverifiedError",
    "UnsupportedConfigurationError",
    "ContainmentError",
    "VerificationError",
    "IncompatibleRepresentationError",
    "CocycleError",
    "ClosureError",
    "Field",
    "GF",
    "QQ",
    "field_of",
    "Matrix",
    "rref",
    "rank",
    "nullspace",
    "image",
    "solve",
    "Subspace",
    "complement_in",
    "quotient_dim",
    "CheckReport",
    "LyAlgebra",
    "require_verified",
    "check_lya",
    "Representation",
    "adjoint_rep",
    "check_representation",
    "LeibnizAlgebra",
    "check_leibniz",
    "leibniz_to_lya",
    "LinearMapCandidate",
    "check_morphism",
    "CochainSpace",
    "Cochain",
    "evaluate",
    "CochainPair",
    "pair_spaces",
    "CoboundaryOperator",
    "coboundary_operator",
    "delta_general",
    "delta1",
    "delta23",
    "CohomologyResult",
    "cohomology",
    "same_class",
    "compare_cocycle_spaces",
    "FiniteGroup",
    "check_group",
    "GroupAction",
    "check_action",
    "FixedSubalgebra",
    "fixed_subalgebra",
    "EquivariantModuleAction",
    "check_equivariant_compat",
    "induced_action",
    "equivariant_subspace",
    "equivariant_cohomology",
    "DeformationJet",
    "IsomorphismJet",
    "compose",
    "JetReport",
    "check_jet",
    "infinitesimal",
    "gauge_transform",
    "equivalent_first_order",
    "check_equivariant_jet",
    "Trivialization",
    "trivialize",
    "RigidityReport",
    "rigidity_probe",
    "Manifest",
    "load",
    "loads",
    "dumps",
]

from ramsey_spaces.domain.ordinals.bijection import (
    IdentityBijection,
    OmegaBijection,
    SwapBijection,
    TableBijection,
    WeightOrderBijection,
    default_bijection,
)
from ramsey_spaces.domain.ordinals.cnf import (
    OMEGA,
    ONE,
    ZERO,
    Cnf,
    OrdinalArithmeticError,
    divide_by_omega,
    format_cnf,
    ordinals_of_weight,
    weight,
)
from ramsey_spaces.domain.ordinals.ordinal_eqrel import (
    OmegaTimesBeta,
    OmegaTimesL,
    OrdinalElem,
    OrdinalEqRel,
    TransferTarget,
    phi,
    phi_inverse,
)
from ramsey_spaces.domain.ordinals.rigid import RigidPrefix, eqrel_to_rigid, rigid_to_eqrel
from ramsey_spaces.domain.ordinals.transfer import (
    FGeqConstraint,
    OrdinalViolation,
    TransferError,
    build_I,
    coarsen_ordinal,
    is_ordinal_coarsening,
    project_k,
    representatives_preserved,
    space_for,
    transfer,
    transfer_inverse,
    validate_ordinal_space,
)

__all__ = [
    "OMEGA",
    "ONE",
    "ZERO",
    "Cnf",
    "FGeqConstraint",
    "IdentityBijection",
    "OmegaBijection",
    "OmegaTimesBeta",
    "OmegaTimesL",
    "OrdinalArithmeticError",
    "OrdinalElem",
    "OrdinalEqRel",
    "OrdinalViolation",
    "RigidPrefix",
    "SwapBijection",
    "TableBijection",
    "TransferError",
    "TransferTarget",
    "WeightOrderBijection",
    "build_I",
    "coarsen_ordinal",
    "default_bijection",
    "divide_by_omega",
    "eqrel_to_rigid",
    "format_cnf",
    "is_ordinal_coarsening",
    "ordinals_of_weight",
    "phi",
    "phi_inverse",
    "project_k",
    "representatives_preserved",
    "rigid_to_eqrel",
    "space_for",
    "transfer",
    "transfer_inverse",
    "validate_ordinal_space",
    "weight",
]

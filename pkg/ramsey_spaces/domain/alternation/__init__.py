from ramsey_spaces.domain.alternation.constraint import (
    AllBlocksConstraint,
    ConstraintSeq,
    GeqConstraint,
    RelationSpace,
    resolve_constraint,
)
from ramsey_spaces.domain.alternation.construction import (
    ConstructionError,
    canonical_finest,
    extend_greedily,
    extend_prefix,
    random_alternating,
    random_coarsening,
)
from ramsey_spaces.domain.alternation.partition import (
    DyadicPartition,
    Partition,
    PeriodicPartition,
)
from ramsey_spaces.domain.alternation.ruler import (
    RulerWitness,
    difference_violations,
    interval_violations,
    sigma,
    sigma_table,
)
from ramsey_spaces.domain.alternation.validators import (
    AlternationViolation,
    ClassConstraintViolation,
    is_space_approximation,
    validate_alternating,
    validate_class_constraint,
)

__all__ = [
    "AllBlocksConstraint",
    "AlternationViolation",
    "ClassConstraintViolation",
    "ConstraintSeq",
    "ConstructionError",
    "DyadicPartition",
    "GeqConstraint",
    "Partition",
    "PeriodicPartition",
    "RelationSpace",
    "RulerWitness",
    "canonical_finest",
    "difference_violations",
    "extend_greedily",
    "extend_prefix",
    "interval_violations",
    "is_space_approximation",
    "random_alternating",
    "random_coarsening",
    "resolve_constraint",
    "sigma",
    "sigma_table",
    "validate_alternating",
    "validate_class_constraint",
]

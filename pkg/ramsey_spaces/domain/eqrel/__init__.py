from ramsey_spaces.domain.eqrel.finite import (
    FiniteEqRel,
    bell_number,
    canonical_form,
    coarsenings,
    leq_fin,
    relations_with_classes,
    restricted_growth_strings,
)
from ramsey_spaces.domain.eqrel.order import (
    INFINITE_DEPTH,
    CoarseningCheck,
    JoinSpec,
    coarsen,
    depth,
    in_bracket,
    is_coarsening,
)
from ramsey_spaces.domain.eqrel.stream import (
    DEFAULT_SCAN_LIMIT,
    EqRelStream,
    IncrementalRepSource,
    StreamMetadata,
    StreamScanLimitError,
)

__all__ = [
    "DEFAULT_SCAN_LIMIT",
    "INFINITE_DEPTH",
    "CoarseningCheck",
    "EqRelStream",
    "FiniteEqRel",
    "IncrementalRepSource",
    "JoinSpec",
    "StreamMetadata",
    "StreamScanLimitError",
    "bell_number",
    "canonical_form",
    "coarsen",
    "coarsenings",
    "depth",
    "in_bracket",
    "is_coarsening",
    "leq_fin",
    "relations_with_classes",
    "restricted_growth_strings",
]

from ramsey_spaces.domain.coding.certificate import (
    ExpandedCertificate,
    PlacementInvariantError,
    expand_certificate,
    variable_offset,
)
from ramsey_spaces.domain.coding.codec import (
    decode_word,
    encode_extension,
    extension_from_targets,
    flatten_letter,
    legal_coordinates,
    tilde_reduce,
)
from ramsey_spaces.domain.coding.construction import (
    ExtensionWitness,
    build_F,
    end_extensions_within_reach,
)
from ramsey_spaces.domain.coding.context import (
    CodingContext,
    CodingError,
    GradedCodingAlphabet,
)

__all__ = [
    "CodingContext",
    "CodingError",
    "ExpandedCertificate",
    "ExtensionWitness",
    "GradedCodingAlphabet",
    "PlacementInvariantError",
    "build_F",
    "decode_word",
    "encode_extension",
    "end_extensions_within_reach",
    "expand_certificate",
    "extension_from_targets",
    "flatten_letter",
    "legal_coordinates",
    "tilde_reduce",
    "variable_offset",
]

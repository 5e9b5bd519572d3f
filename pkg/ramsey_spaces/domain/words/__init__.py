from ramsey_spaces.domain.words.alphabet import (
    Alphabet,
    FiniteAlphabet,
    GradedAlphabet,
    letter_from_json,
)
from ramsey_spaces.domain.words.hales_jewett import (
    HJCertificate,
    SearchExhausted,
    SearchHooks,
    compositions,
    hj_line_search,
    lv_hj_bounded_search,
)
from ramsey_spaces.domain.words.semigroup import (
    Colouring,
    Counterexample,
    SemigroupMode,
    TranslateTooLargeError,
    certificate_colour,
    enumerate_semigroup,
    iter_semigroup,
    semigroup_size,
    translate,
    verify_monochromatic,
)
from ramsey_spaces.domain.words.word import (
    EMPTY_WORD,
    VARIABLE,
    Letter,
    Symbol,
    Word,
    concat,
    substitute,
)

__all__ = [
    "EMPTY_WORD",
    "VARIABLE",
    "Alphabet",
    "Colouring",
    "Counterexample",
    "FiniteAlphabet",
    "GradedAlphabet",
    "HJCertificate",
    "Letter",
    "SearchExhausted",
    "SearchHooks",
    "SemigroupMode",
    "Symbol",
    "TranslateTooLargeError",
    "Word",
    "certificate_colour",
    "compositions",
    "concat",
    "enumerate_semigroup",
    "hj_line_search",
    "iter_semigroup",
    "lv_hj_bounded_search",
    "semigroup_size",
    "substitute",
    "translate",
    "verify_monochromatic",
]

from ramsey_spaces.application.experiments.axioms import (
    AxiomProbeOutcome,
    axiom_probe,
    fan_mismatch,
)
from ramsey_spaces.application.experiments.colouring import (
    ClopenColouring,
    ClopenPredicate,
    EverythingPredicate,
    ExtensionPredicate,
    FirstJoinPredicate,
    LambdaParityPredicate,
)
from ramsey_spaces.application.experiments.corpus import relation_corpus, rigid_corpus
from ramsey_spaces.application.experiments.miniature import (
    ColouringVerdict,
    MiniatureOutcome,
    miniature_dual_ramsey,
)
from ramsey_spaces.application.experiments.pigeonhole import (
    PigeonholeOutcome,
    PigeonholeSettings,
    pigeonhole_probe,
)

__all__ = [
    "AxiomProbeOutcome",
    "ClopenColouring",
    "ClopenPredicate",
    "ColouringVerdict",
    "EverythingPredicate",
    "ExtensionPredicate",
    "FirstJoinPredicate",
    "LambdaParityPredicate",
    "MiniatureOutcome",
    "PigeonholeOutcome",
    "PigeonholeSettings",
    "axiom_probe",
    "fan_mismatch",
    "miniature_dual_ramsey",
    "pigeonhole_probe",
    "relation_corpus",
    "rigid_corpus",
]

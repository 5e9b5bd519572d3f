from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any, Literal

from ramsey_spaces.application.experiments.corpus import relation_corpus
from ramsey_spaces.data_formats.eqrel_text import format_eqrel
from ramsey_spaces.domain.alternation.construction import ConstructionError, extend_greedily
from ramsey_spaces.domain.alternation.validators import (
    is_space_approximation,
    validate_alternating,
    validate_class_constraint,
)
from ramsey_spaces.domain.eqrel.finite import (
    FiniteEqRel,
    bell_number,
    canonical_form,
    coarsenings,
    leq_fin,
)
from ramsey_spaces.domain.eqrel.order import is_coarsening

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable, Sequence

    from ramsey_spaces.application.search.cancellation import CancellationToken
    from ramsey_spaces.domain.alternation.constraint import RelationSpace
    from ramsey_spaces.domain.eqrel.stream import EqRelStream

logger = logging.getLogger(__name__)

Axiom = Literal["A1", "A2", "A3"]
AXIOMS: tuple[Axiom, ...] = ("A1", "A2", "A3")
MAX_FAN_LENGTH = 6
DEFAULT_CORPUS_SIZE = 8
DEFAULT_WITNESS_LIMIT = 32


@dataclass(frozen=True)
class AxiomProbeOutcome:
    """有界な反証の試み。counterexamples が空なら探索した範囲で反例なし。"""

    which: Axiom
    depth: int
    checked: int
    counterexamples: tuple[dict[str, Any], ...] = ()
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict[str, Any]:
        return {
            "axiom": self.which,
            "depth": self.depth,
            "checked": self.checked,
            "counterexamples": list(self.counterexamples),
            "details": self.details,
        }


def _probe_a1(corpus: Sequence[EqRelStream], depth: int) -> AxiomProbeOutcome:
    """r_0(A) = ∅ と、r_n(A) = r_m(B) なら n = m かつ k < n で r_k が一致することを調べる。"""
    approximations = [[relation.approx(n) for n in range(depth + 1)] for relation in corpus]
    counterexamples: list[dict[str, Any]] = []
    checked = 0
    for i, levels in enumerate(approximations):
        checked += 1
        if levels[0] != FiniteEqRel.empty():
            counterexamples.append({"condition": "1", "relation": i})
    for (i, first), (j, second) in itertools.product(enumerate(approximations), repeat=2):
        for n, m in itertools.product(range(depth + 1), repeat=2):
            if first[n] != second[m]:
                continue
            checked += 1
            if n != m or any(first[k] != second[k] for k in range(n)):
                counterexamples.append(
                    {"condition": "3", "relations": [i, j], "n": n, "m": m}
                )
    return AxiomProbeOutcome("A1", depth, checked, tuple(counterexamples))


def _reference_fan(b: FiniteEqRel) -> frozenset[FiniteEqRel]:
    """代表元へのラベルを全て試し、leq_fin(a, b) を満たす a を集める。"""
    size = b.length
    merges = {canonical_form(labels) for labels in itertools.product(range(size), repeat=size)}
    classes = [b.class_index(x) for x in range(b.m)]
    labelled = (canonical_form([merge.assign[c] for c in classes]) for merge in merges)
    return frozenset(a for a in labelled if leq_fin(a, b))


def _compare_fan(b: FiniteEqRel, listed: list[FiniteEqRel]) -> dict[str, Any] | None:
    expected = _reference_fan(b)
    missing = expected.difference(listed)
    extra = set(listed).difference(expected)
    duplicated = len(listed) - len(set(listed))
    if not (missing or extra or duplicated) and len(listed) == bell_number(b.length):
        return None
    return {
        "b": format_eqrel(b),
        "count": len(listed),
        "bell": bell_number(b.length),
        "missing": sorted(format_eqrel(a) for a in missing),
        "extra": sorted(format_eqrel(a) for a in extra),
        "duplicated": duplicated,
    }


def fan_mismatch(
    b: FiniteEqRel, fan: Callable[[FiniteEqRel], Iterable[FiniteEqRel]] = coarsenings
) -> dict[str, Any] | None:
    """fan(b) が {a : a <=_fin b} をちょうど1回ずつ列挙しているかを調べ、ずれを返す。"""
    return _compare_fan(b, list(fan(b)))


def _probe_a2(
    corpus: Sequence[EqRelStream],
    space: RelationSpace,
    depth: int,
    fan: Callable[[FiniteEqRel], Iterable[FiniteEqRel]],
) -> AxiomProbeOutcome:
    """|b| <= 6 の近似 b について、fan(b) を総当たりの {a : a <=_fin b} と Bell 数に照らす。"""
    counterexamples: list[dict[str, Any]] = []
    fans: dict[str, dict[str, int]] = {}
    checked = 0
    for i, relation in enumerate(corpus):
        for length in range(min(depth, MAX_FAN_LENGTH) + 1):
            b = relation.approx(length)
            members = list(fan(b))
            checked += 1
            valid = sum(1 for a in members if is_space_approximation(a, space))
            entry = fans.setdefault(
                str(length),
                {"bell": bell_number(length), "total": len(members), "valid_min": valid},
            )
            entry["valid_min"] = min(entry["valid_min"], valid)
            mismatch = _compare_fan(b, members)
            if mismatch is not None:
                counterexamples.append({"condition": "1", "relation": i, **mismatch})
        checked += 1
        if not is_coarsening(relation, relation, max(depth, 1)):
            counterexamples.append({"condition": "2", "relation": i})
    return AxiomProbeOutcome("A2", depth, checked, tuple(counterexamples), {"fans": fans})


def _witness_failure(
    a: FiniteEqRel, base: EqRelStream, space: RelationSpace, depth: int
) -> str | None:
    """[a, base] の元を貪欲に作り、作れなければ理由を返す。"""
    try:
        witness = extend_greedily(a, base, space)
        if witness.approx(a.length) != a:
            return "r_|a|(witness) != a"
        probe = max(depth, a.length + 1)
        if not is_coarsening(witness, base, probe):
            return "witness は base の粗化ではありません"
        if validate_alternating(witness, space.partition, probe) is not None:
            return "witness は交代的ではありません"
        if space.constrained and (
            validate_class_constraint(witness, space.partition, space.constraint, probe)
            is not None
        ):
            return "witness はクラスの制約を破っています"
    except ConstructionError as e:
        return str(e)
    return None


def _probe_a3(
    corpus: Sequence[EqRelStream],
    space: RelationSpace,
    depth: int,
    witness_limit: int,
    token: CancellationToken | None,
) -> AxiomProbeOutcome:
    """depth_B(a) = d の a と A' ∈ [r_d(B), B] について [a, A'] が空でないことを構成で示す。

    A' は B の貪欲な延長、a は r_d(B) の粗化のうち空間の近似になるもの。
    """
    counterexamples: list[dict[str, Any]] = []
    witnessed = 0
    for i, base in enumerate(corpus):
        for d in range(depth + 1):
            if token is not None:
                token.raise_if_cancelled()
            top = base.approx(d)
            upper = extend_greedily(top, base, space)
            candidates = (a for a in coarsenings(top) if is_space_approximation(a, space))
            for a in itertools.islice(candidates, witness_limit):
                witnessed += 1
                reason = _witness_failure(a, upper, space, depth)
                if reason is not None:
                    counterexamples.append(
                        {
                            "condition": "1",
                            "relation": i,
                            "d": d,
                            "a": format_eqrel(a),
                            "reason": reason,
                        }
                    )
    return AxiomProbeOutcome(
        "A3", depth, witnessed, tuple(counterexamples), {"witnesses_built": witnessed}
    )


def axiom_probe(
    space: RelationSpace,
    which: Axiom,
    depth: int,
    *,
    corpus_size: int = DEFAULT_CORPUS_SIZE,
    seed: int = 0,
    witness_limit: int = DEFAULT_WITNESS_LIMIT,
    token: CancellationToken | None = None,
    fan: Callable[[FiniteEqRel], Iterable[FiniteEqRel]] = coarsenings,
) -> AxiomProbeOutcome:
    """生成した関係の集まりの上で、公理 which を depth まで反証しようとする。

    fan は A2 で検査する粗化の列挙で、既定は coarsenings。
    """
    if which not in AXIOMS:
        msg = f"未知の公理です: {which}"
        raise ValueError(msg)
    if depth < 0:
        msg = f"depth は0以上にしてください: {depth}"
        raise ValueError(msg)
    corpus = list(relation_corpus(space, corpus_size, seed))
    if which == "A1":
        outcome = _probe_a1(corpus, depth)
    elif which == "A2":
        outcome = _probe_a2(corpus, space, depth, fan)
    else:
        outcome = _probe_a3(corpus, space, depth, witness_limit, token)
    logger.info(
        "axiom_probe %s depth=%d: 検査 %d 件, 反例 %d 件",
        which,
        depth,
        outcome.checked,
        len(outcome.counterexamples),
    )
    return outcome

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from ramsey_spaces.domain.alternation.constraint import resolve_constraint

if TYPE_CHECKING:
    from ramsey_spaces.domain.alternation.constraint import ConstraintSeq, RelationSpace
    from ramsey_spaces.domain.alternation.partition import Partition
    from ramsey_spaces.domain.eqrel.finite import FiniteEqRel
    from ramsey_spaces.domain.eqrel.stream import EqRelStream


@dataclass(frozen=True)
class AlternationViolation:
    """p_k(E) が交代パターンの要求するブロックにない。"""

    k: int
    rep: int
    expected_block: int
    actual_block: int

    def describe(self) -> str:
        return (
            f"p_{self.k}={self.rep} はブロック {self.actual_block} にあります"
            f" (期待値 {self.expected_block})"
        )

    def to_dict(self) -> dict[str, object]:
        return {
            "condition": "alternating",
            "k": self.k,
            "rep": self.rep,
            "expected_block": self.expected_block,
            "actual_block": self.actual_block,
        }


@dataclass(frozen=True)
class ClassConstraintViolation:
    """P_n クラスに I_n の外のブロックの元が含まれている。"""

    element: int
    rep: int
    rep_block: int
    element_block: int

    def describe(self) -> str:
        return (
            f"元 {self.element} (ブロック {self.element_block}) が"
            f" ブロック {self.rep_block} の代表元 {self.rep} のクラスにあります"
        )

    def to_dict(self) -> dict[str, object]:
        return {
            "condition": "class-constraint",
            "element": self.element,
            "rep": self.rep,
            "rep_block": self.rep_block,
            "element_block": self.element_block,
        }


def _require_depth(depth: int) -> None:
    if depth < 1:
        msg = f"depth は1以上にしてください: {depth}"
        raise ValueError(msg)


def validate_alternating(
    relation: EqRelStream, partition: Partition, depth: int
) -> AlternationViolation | None:
    """k < depth の全ての代表元について θ(p_k) が交代パターンに従うかを調べる。"""
    _require_depth(depth)
    for k, rep in enumerate(relation.reps(depth)):
        expected = partition.pattern_block(k)
        actual = partition.classify(rep)
        if actual != expected:
            return AlternationViolation(k, rep, expected, actual)
    return None


def validate_class_constraint(
    relation: EqRelStream,
    partition: Partition,
    constraint: ConstraintSeq | None,
    depth: int,
) -> ClassConstraintViolation | None:
    """dom(r_depth(E)) の各元が、自分のクラスの代表元のブロックの I_n に入るかを調べる。

    constraint が None のときは条件 (c) を検査する。
    """
    _require_depth(depth)
    resolved = resolve_constraint(constraint)
    for x in range(relation.domain_size(depth)):
        rep = relation.rep_of(x)
        rep_block = partition.classify(rep)
        element_block = partition.classify(x)
        if not resolved.contains(rep_block, element_block):
            return ClassConstraintViolation(x, rep, rep_block, element_block)
    return None


def is_space_approximation(a: FiniteEqRel, space: RelationSpace) -> bool:
    """a がある A ∈ space の近似 r_{|a|}(A) になり得るか。

    代表元がパターンに従い、各元がクラスの制約を満たし、次の元 a.m が
    p_{|a|} になれるブロックにあることを調べる。
    """
    partition = space.partition
    for k, rep in enumerate(a.reps):
        if partition.classify(rep) != partition.pattern_block(k):
            return False
    for x, rep in enumerate(a.assign):
        if not space.admits(partition.classify(rep), partition.classify(x)):
            return False
    return partition.classify(a.m) == partition.pattern_block(a.length)

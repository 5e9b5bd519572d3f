from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from ramsey_spaces.domain.alternation.partition import Partition


class ConstraintSeq(ABC):
    """ブロック番号 n ごとの許容ブロック集合 I_n (n ∈ I_n を満たす)。

    組み込みの制約はどれも推移的 (m ∈ I_j かつ j ∈ I_n なら m ∈ I_n) であり、
    併合の可否はクラスの代表元だけで判定できる。
    """

    @property
    @abstractmethod
    def spec(self) -> str:
        """CLIの制約指定文字列。"""

    @abstractmethod
    def contains(self, n: int, m: int) -> bool:
        """m ∈ I_n かを返す。"""

    def is_vacuous(self) -> bool:
        """全ての I_n が ω であるか。"""
        return False


@dataclass(frozen=True)
class GeqConstraint(ConstraintSeq):
    """条件 (c): I_n = {m : m >= n}。"""

    @property
    def spec(self) -> str:
        return "geq"

    def contains(self, n: int, m: int) -> bool:
        return m >= n


@dataclass(frozen=True)
class AllBlocksConstraint(ConstraintSeq):
    """I_n = ω。条件 (a),(b) だけの空間を表す。"""

    @property
    def spec(self) -> str:
        return "all"

    def contains(self, n: int, m: int) -> bool:  # noqa: ARG002
        return True

    def is_vacuous(self) -> bool:
        return True


def resolve_constraint(constraint: ConstraintSeq | None) -> ConstraintSeq:
    """None を条件 (c) として解決する。"""
    return GeqConstraint() if constraint is None else constraint


@dataclass(frozen=True)
class RelationSpace:
    """分割と制約の組。E^P_∞ または E^{P,I}_∞ を指す。"""

    partition: Partition
    constraint: ConstraintSeq

    @property
    def constrained(self) -> bool:
        return not self.constraint.is_vacuous()

    def admits(self, rep_block: int, element_block: int) -> bool:
        """P_{rep_block} クラスに P_{element_block} の元が属してよいか。"""
        return self.constraint.contains(rep_block, element_block)

    def can_join(self, class_rep: int, target_rep: int) -> bool:
        """代表元 class_rep のクラスを target_rep のクラスへ併合できるかを返す。"""
        classify = self.partition.classify
        return self.admits(classify(target_rep), classify(class_rep))

    @property
    def spec(self) -> str:
        return f"{self.partition.spec} {self.constraint.spec}"

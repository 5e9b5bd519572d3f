from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property
from typing import Literal

from ramsey_spaces.domain.alternation.ruler import sigma

PartitionKind = Literal["finite", "infinite"]


class Partition(ABC):
    """ω をブロック P_i へ分ける分割。θ(n) と ψ(n) と列挙子を持つ。"""

    kind: PartitionKind

    @property
    @abstractmethod
    def num_blocks(self) -> int | None:
        """有限分割ならブロック数 l、無限分割なら None。"""

    @property
    @abstractmethod
    def spec(self) -> str:
        """CLIの分割指定文字列。"""

    @abstractmethod
    def classify(self, n: int) -> int:
        """θ(n): n が属するブロック番号。"""

    @abstractmethod
    def element_at(self, block: int, rank: int) -> int:
        """P_block の rank 番目の元。"""

    @abstractmethod
    def within_rank(self, n: int) -> int:
        """ψ(n): ブロック内での n の順位。"""

    @abstractmethod
    def pattern_block(self, k: int) -> int:
        """交代条件で k 番目の代表元に要求されるブロック番号。"""


@dataclass(frozen=True)
class PeriodicPartition(Partition):
    """周期 pattern でブロックを割り当てる有限分割。mod:l は pattern=(0..l-1)。"""

    pattern: tuple[int, ...]
    kind: PartitionKind = "finite"

    def __post_init__(self) -> None:
        if not self.pattern:
            msg = "分割のパターンが空です。"
            raise ValueError(msg)
        first_occurrences: list[int] = []
        for block in self.pattern:
            if block not in first_occurrences:
                first_occurrences.append(block)
        if first_occurrences != list(range(len(first_occurrences))):
            msg = (
                "ブロックは 0,1,2,... の順に初めて現れる必要があります"
                f" (min P_i < min P_j): {self.pattern}"
            )
            raise ValueError(msg)

    @classmethod
    def mod(cls, l: int) -> PeriodicPartition:  # noqa: E741
        """n mod l でブロックを決める分割を返す。"""
        if l < 1:
            msg = f"ブロック数は1以上にしてください: {l}"
            raise ValueError(msg)
        return cls(tuple(range(l)))

    @property
    def num_blocks(self) -> int:
        return max(self.pattern) + 1

    @property
    def period(self) -> int:
        return len(self.pattern)

    @property
    def spec(self) -> str:
        if self.pattern == tuple(range(self.num_blocks)):
            return f"mod:{self.num_blocks}"
        return "periodic:" + ",".join(str(block) for block in self.pattern)

    @cached_property
    def _offsets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(j for j, block in enumerate(self.pattern) if block == i)
            for i in range(self.num_blocks)
        )

    def classify(self, n: int) -> int:
        return self.pattern[n % self.period]

    def element_at(self, block: int, rank: int) -> int:
        offsets = self._offsets[block]
        cycle, index = divmod(rank, len(offsets))
        return cycle * self.period + offsets[index]

    def within_rank(self, n: int) -> int:
        cycle, position = divmod(n, self.period)
        offsets = self._offsets[self.pattern[position]]
        return cycle * len(offsets) + offsets.index(position)

    def pattern_block(self, k: int) -> int:
        return k % self.num_blocks


@dataclass(frozen=True)
class DyadicPartition(Partition):
    """P_n = {k : sigma(k) = n} による無限分割。"""

    kind: PartitionKind = "infinite"

    @property
    def num_blocks(self) -> None:
        return None

    @property
    def spec(self) -> str:
        return "dyadic"

    def classify(self, n: int) -> int:
        return sigma(n)

    def element_at(self, block: int, rank: int) -> int:
        return (1 << block) * (2 * rank + 1) - 1

    def within_rank(self, n: int) -> int:
        return ((n + 1) >> sigma(n)) >> 1

    def pattern_block(self, k: int) -> int:
        return sigma(k)

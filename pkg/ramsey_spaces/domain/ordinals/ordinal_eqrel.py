from __future__ import annotations

import threading
from abc import ABC, abstractmethod
from collections.abc import Callable, Hashable
from dataclasses import dataclass
from functools import total_ordering
from typing import TYPE_CHECKING

from ramsey_spaces.domain.alternation.partition import DyadicPartition, PeriodicPartition
from ramsey_spaces.domain.eqrel.stream import (
    DEFAULT_SCAN_LIMIT,
    EqRelStream,
    IncrementalRepSource,
    StreamMetadata,
    StreamScanLimitError,
)
from ramsey_spaces.domain.ordinals.cnf import OMEGA, Cnf, format_cnf

if TYPE_CHECKING:
    from ramsey_spaces.domain.alternation.partition import Partition
    from ramsey_spaces.domain.ordinals.bijection import OmegaBijection

ClassKey = Callable[["OrdinalElem"], Hashable]


@total_ordering
@dataclass(frozen=True)
class OrdinalElem:
    """γ 番目の ω のコピーの n 番目の元、すなわち順序数 ω・γ + n。"""

    n: int
    copy: Cnf

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, OrdinalElem):
            return NotImplemented
        return (self.copy, self.n) < (other.copy, other.n)

    def __str__(self) -> str:
        return f"({self.n}, {format_cnf(self.copy)})"


class TransferTarget(ABC):
    """ω・l または α = ω・β。≼ (≼_f) による列挙は標準分割の列挙の逆写像で与える。"""

    @property
    @abstractmethod
    def spec(self) -> str: ...

    @property
    @abstractmethod
    def alpha(self) -> Cnf: ...

    @property
    @abstractmethod
    def order_partition(self) -> Partition:
        """≼ の列挙を与える ω の標準分割 (mod:l または dyadic)。"""

    @abstractmethod
    def copy_of_block(self, block: int) -> Cnf: ...

    @abstractmethod
    def block_of_copy(self, copy: Cnf) -> int: ...

    def element_at(self, index: int) -> OrdinalElem:
        """≼ で index 番目の元を返す。"""
        partition = self.order_partition
        return OrdinalElem(
            partition.within_rank(index), self.copy_of_block(partition.classify(index))
        )

    def order_index(self, elem: OrdinalElem) -> int:
        """elem が ≼ で何番目かを返す。"""
        return self.order_partition.element_at(self.block_of_copy(elem.copy), elem.n)

    def pattern_copy(self, k: int) -> Cnf:
        """条件 (a) で k 番目の代表元に要求されるコピー。"""
        return self.copy_of_block(self.order_partition.pattern_block(k))

    def accepts(self, partition: Partition) -> bool:
        return partition.num_blocks == self.order_partition.num_blocks


@dataclass(frozen=True)
class OmegaTimesL(TransferTarget):
    """ω・l。≼ は (n, i) の辞書式順序。"""

    l: int  # noqa: E741

    def __post_init__(self) -> None:
        if self.l < 1:
            msg = f"l は1以上にしてください: {self.l}"
            raise ValueError(msg)

    @property
    def spec(self) -> str:
        return f"omega*{self.l}"

    @property
    def alpha(self) -> Cnf:
        return Cnf.power(1, self.l)

    @property
    def order_partition(self) -> Partition:
        return PeriodicPartition.mod(self.l)

    def copy_of_block(self, block: int) -> Cnf:
        return Cnf.of(block)

    def block_of_copy(self, copy: Cnf) -> int:
        block = copy.finite_value()
        if block >= self.l:
            msg = f"コピー {block} は ω・{self.l} にありません。"
            raise ValueError(msg)
        return block


@dataclass(frozen=True)
class OmegaTimesBeta(TransferTarget):
    """α = ω・β。P_n を f(n) 番目のコピーと同一視し、≼_f は σ に従う。"""

    bijection: OmegaBijection

    @property
    def spec(self) -> str:
        return f"alpha:{format_cnf(self.alpha)} f={self.bijection.spec}"

    @property
    def alpha(self) -> Cnf:
        return OMEGA * self.bijection.beta

    @property
    def order_partition(self) -> Partition:
        return DyadicPartition()

    def copy_of_block(self, block: int) -> Cnf:
        return self.bijection(block)

    def block_of_copy(self, copy: Cnf) -> int:
        return self.bijection.inverse(copy)


def phi(n: int, partition: Partition, target: TransferTarget) -> OrdinalElem:
    """φ(n) = (ψ(n), θ(n)) (α の場合はコピーを f(θ(n)) とする)。"""
    return OrdinalElem(partition.within_rank(n), target.copy_of_block(partition.classify(n)))


def phi_inverse(elem: OrdinalElem, partition: Partition, target: TransferTarget) -> int:
    return partition.element_at(target.block_of_copy(elem.copy), elem.n)


class _PullbackSource(IncrementalRepSource):
    """ω 上で φ 像のクラスキーが初めて現れた元を代表元にする。"""

    def __init__(self, key: ClassKey, partition: Partition, target: TransferTarget) -> None:
        super().__init__()
        self._key = key
        self._partition = partition
        self._target = target
        self._first: dict[Hashable, int] = {}

    def _next_rep(self, x: int) -> int:
        return self._first.setdefault(self._key(phi(x, self._partition, self._target)), x)


def pullback_stream(
    key: ClassKey, partition: Partition, target: TransferTarget, description: str = ""
) -> EqRelStream:
    """φ 像のクラスキーで決まる ω 上の関係を返す。"""
    return EqRelStream(
        _PullbackSource(key, partition, target),
        StreamMetadata("pullback", description=description),
    )


class OrdinalEqRel:
    """α 上の同値関係。ω 側の関係 backing を φ で写したものとして保持する。"""

    def __init__(
        self,
        backing: EqRelStream,
        partition: Partition,
        target: TransferTarget,
        scan_limit: int = DEFAULT_SCAN_LIMIT,
    ) -> None:
        if not target.accepts(partition):
            msg = f"分割 {partition.spec} は {target.spec} と対応しません。"
            raise ValueError(msg)
        self.backing = backing
        self.partition = partition
        self.target = target
        self.scan_limit = scan_limit
        self._order_reps: list[OrdinalElem] = []
        self._rank_of_key: dict[int, int] = {}
        self._scanned = 0
        self._lock = threading.RLock()

    @classmethod
    def from_key(
        cls,
        key: ClassKey,
        partition: Partition,
        target: TransferTarget,
        description: str = "",
    ) -> OrdinalEqRel:
        """α の元からクラスキーを返す関数で関係を作る。"""
        return cls(pullback_stream(key, partition, target, description), partition, target)

    def to_omega(self, elem: OrdinalElem) -> int:
        return phi_inverse(elem, self.partition, self.target)

    def from_omega(self, x: int) -> OrdinalElem:
        return phi(x, self.partition, self.target)

    def class_key(self, elem: OrdinalElem) -> int:
        """elem のクラスを ω 側の代表元で識別する。"""
        return self.backing.rep_of(self.to_omega(elem))

    def same_class(self, first: OrdinalElem, second: OrdinalElem) -> bool:
        return self.class_key(first) == self.class_key(second)

    def _scan_to(self, index: int) -> None:
        with self._lock:
            while self._scanned <= index:
                if self._scanned >= self.scan_limit:
                    msg = f"≼ の走査が上限 {self.scan_limit} を超えました。"
                    raise StreamScanLimitError(msg)
                elem = self.target.element_at(self._scanned)
                key = self.class_key(elem)
                if key not in self._rank_of_key:
                    self._rank_of_key[key] = len(self._order_reps)
                    self._order_reps.append(elem)
                self._scanned += 1

    def order_reps(self, count: int) -> tuple[OrdinalElem, ...]:
        """≼ で最小の代表元 q_0, q_1, ... を最初の count 個返す。"""
        with self._lock:
            while len(self._order_reps) < count:
                self._scan_to(self._scanned)
            return tuple(self._order_reps[:count])

    def order_rank(self, elem: OrdinalElem) -> int:
        """elem のクラスが ≼ で何番目に現れるか。"""
        self._scan_to(self.target.order_index(elem))
        return self._rank_of_key[self.class_key(elem)]

    def window(self, size: int) -> tuple[OrdinalElem, ...]:
        """≼ で最初の size 個の元。"""
        return tuple(self.target.element_at(i) for i in range(size))

    def window_for(self, depth: int) -> int:
        """q_0..q_{depth-1} を全て含む最小の窓の大きさ。"""
        if depth == 0:
            return 0
        return self.target.order_index(self.order_reps(depth)[-1]) + 1

    def standard_reps(self, size: int) -> tuple[OrdinalElem, ...]:
        """窓の中で各クラスの標準順序での最小元を取り、≼ の順に並べて返す。"""
        minima: dict[int, OrdinalElem] = {}
        for elem in self.window(size):
            key = self.class_key(elem)
            current = minima.get(key)
            if current is None or elem < current:
                minima[key] = elem
        return tuple(sorted(minima.values(), key=self.target.order_index))

    def classes_in(self, size: int) -> tuple[tuple[OrdinalElem, ...], ...]:
        """窓の中のクラス分けを ≼ の順で返す。"""
        groups: dict[int, list[OrdinalElem]] = {}
        for elem in self.window(size):
            groups.setdefault(self.class_key(elem), []).append(elem)
        return tuple(tuple(group) for group in groups.values())

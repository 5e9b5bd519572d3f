from __future__ import annotations

import threading
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Literal, Protocol

from ramsey_spaces.domain.eqrel.finite import FiniteEqRel

DEFAULT_SCAN_LIMIT = 1 << 20

Provenance = Literal[
    "identity",
    "pattern-canonical",
    "random-alternating",
    "coarsening-of",
    "greedy-extension",
    "prefix-extension",
    "word-defined",
    "pullback",
]


class StreamScanLimitError(RuntimeError):
    """代表元の探索が走査上限を超えたことを表す。"""


class RepSource(Protocol):
    """ω の各元に最小代表元を返す純粋な関数の Port。"""

    def rep_of(self, x: int) -> int:
        """x のクラスの最小元を返す。"""
        ...


@dataclass(frozen=True)
class StreamMetadata:
    """ストリームがどの構成子から作られたかの記録。"""

    provenance: Provenance
    description: str = ""
    reach: int | None = None

    def to_dict(self) -> dict[str, object]:
        return {
            "provenance": self.provenance,
            "description": self.description,
            "reach": self.reach,
        }


class IdentitySource:
    """全ての元が自分自身の代表元になる関係。"""

    def rep_of(self, x: int) -> int:
        return x


class IncrementalRepSource(ABC):
    """0 から順に代表元を確定させ、結果をメモ化する RepSource の基底。

    サブクラスは x 未満の割り当てが確定した状態で呼ばれる `_next_rep` だけを実装する。
    """

    def __init__(self) -> None:
        self._assign: list[int] = []
        self._reps: list[int] = []
        self._lock = threading.RLock()

    def rep_of(self, x: int) -> int:
        with self._lock:
            while len(self._assign) <= x:
                y = len(self._assign)
                rep = self._next_rep(y)
                if rep == y:
                    self._reps.append(y)
                elif not 0 <= rep < y or self._assign[rep] != rep:
                    msg = f"元 {y} に不正な代表元 {rep} が割り当てられました。"
                    raise RuntimeError(msg)
                self._assign.append(rep)
            return self._assign[x]

    @abstractmethod
    def _next_rep(self, x: int) -> int:
        """x 未満が確定した状態で x の代表元を決める。"""


class EqRelStream:
    """ω 上の同値関係を、整合的な近似列 r_n として遅延評価するストリーム。"""

    def __init__(
        self,
        source: RepSource,
        metadata: StreamMetadata,
        scan_limit: int = DEFAULT_SCAN_LIMIT,
    ) -> None:
        self._source = source
        self.metadata = metadata
        self.scan_limit = scan_limit
        self._reps: list[int] = []
        self._rep_index: dict[int, int] = {}
        self._scanned = 0
        self._lock = threading.RLock()

    @classmethod
    def identity(cls) -> EqRelStream:
        """恒等関係 (全ての元が代表元) を返す。"""
        return cls(IdentitySource(), StreamMetadata("identity"))

    def rep_of(self, x: int) -> int:
        """x のクラスの最小代表元を返す。"""
        if x < 0:
            msg = f"ω の元は非負である必要があります: {x}"
            raise ValueError(msg)
        return self._source.rep_of(x)

    def rep(self, k: int) -> int:
        """k番目の最小代表元 p_k を返す。"""
        self._discover(k + 1)
        return self._reps[k]

    def reps(self, count: int) -> tuple[int, ...]:
        """最初の count 個の最小代表元を返す。"""
        self._discover(count)
        return tuple(self._reps[:count])

    def rep_index(self, x: int) -> int:
        """x が属するクラスの番号 (代表元の順位) を返す。"""
        rep = self.rep_of(x)
        with self._lock:
            while rep not in self._rep_index:
                self._discover(len(self._reps) + 1)
            return self._rep_index[rep]

    def domain_size(self, n: int) -> int:
        """dom(r_n) の大きさ、すなわち p_n を返す。"""
        return self.rep(n)

    def approx(self, n: int) -> FiniteEqRel:
        """n番目の近似 r_n を返す。"""
        if n < 0:
            msg = f"近似の番号は非負である必要があります: {n}"
            raise ValueError(msg)
        return self.prefix(self.domain_size(n))

    def prefix(self, size: int) -> FiniteEqRel:
        """{0..size-1} への制限を返す。"""
        return FiniteEqRel(tuple(self.rep_of(x) for x in range(size)))

    def _discover(self, count: int) -> None:
        with self._lock:
            while len(self._reps) < count:
                if self._scanned >= self.scan_limit:
                    msg = (
                        f"{self.scan_limit} 個の元を走査しても代表元が {count} 個見つかりません"
                        f" ({self.metadata.provenance})。"
                    )
                    raise StreamScanLimitError(msg)
                x = self._scanned
                if self.rep_of(x) == x:
                    self._rep_index[x] = len(self._reps)
                    self._reps.append(x)
                self._scanned += 1

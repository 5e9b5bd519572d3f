from __future__ import annotations

import itertools
import threading
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import TYPE_CHECKING

from ramsey_spaces.domain.ordinals.cnf import (
    OMEGA,
    ZERO,
    Cnf,
    OrdinalArithmeticError,
    coerce,
    ordinals_of_weight,
    weight,
)

if TYPE_CHECKING:
    from collections.abc import Iterator, Sequence

DEFAULT_WEIGHT_LIMIT = 64


class OmegaBijection(ABC):
    """f(0) = 0 を満たす全単射 f : ω → β。"""

    @property
    @abstractmethod
    def beta(self) -> Cnf: ...

    @property
    @abstractmethod
    def spec(self) -> str:
        """CLIの --bijection 指定文字列。"""

    @abstractmethod
    def __call__(self, n: int) -> Cnf: ...

    @abstractmethod
    def inverse(self, gamma: Cnf) -> int: ...

    def _check_target(self, gamma: Cnf) -> None:
        if not gamma < self.beta:
            msg = f"{gamma} は β={self.beta} の元ではありません。"
            raise OrdinalArithmeticError(msg)


@dataclass(frozen=True)
class IdentityBijection(OmegaBijection):
    """β = ω の恒等写像。"""

    @property
    def beta(self) -> Cnf:
        return OMEGA

    @property
    def spec(self) -> str:
        return "id"

    def __call__(self, n: int) -> Cnf:
        return Cnf.of(n)

    def inverse(self, gamma: Cnf) -> int:
        self._check_target(gamma)
        return gamma.finite_value()


class WeightOrderBijection(OmegaBijection):
    """β 未満の順序数を (重み, 大きさ) の順に並べた全単射。β = ω なら恒等写像になる。"""

    def __init__(self, beta: Cnf, weight_limit: int = DEFAULT_WEIGHT_LIMIT) -> None:
        if beta < OMEGA:
            msg = f"β は ω 以上である必要があります: {beta}"
            raise OrdinalArithmeticError(msg)
        self._beta = beta
        self._weight_limit = weight_limit
        self._values: list[Cnf] = []
        self._index: dict[Cnf, int] = {}
        self._weights = self._members()
        self._lock = threading.Lock()

    @property
    def beta(self) -> Cnf:
        return self._beta

    @property
    def spec(self) -> str:
        return "weight"

    def _members(self) -> Iterator[Cnf]:
        for total in itertools.count():
            if total > self._weight_limit:
                msg = f"重み {self._weight_limit} までに次の元がありません (β={self._beta})。"
                raise OrdinalArithmeticError(msg)
            yield from (gamma for gamma in ordinals_of_weight(total) if gamma < self._beta)

    def _extend_to(self, count: int) -> None:
        with self._lock:
            while len(self._values) < count:
                gamma = next(self._weights)
                self._index[gamma] = len(self._values)
                self._values.append(gamma)

    def __call__(self, n: int) -> Cnf:
        self._extend_to(n + 1)
        return self._values[n]

    def inverse(self, gamma: Cnf) -> int:
        self._check_target(gamma)
        # γ の番号は重み weight(γ) 以下の元の個数より小さい
        total = weight(gamma)
        bound = sum(
            sum(1 for delta in ordinals_of_weight(w) if delta < self._beta)
            for w in range(total + 1)
        )
        self._extend_to(bound)
        return self._index[gamma]


@dataclass(frozen=True)
class SwapBijection(OmegaBijection):
    """base の後に i と j の像を入れ替えた全単射。"""

    base: OmegaBijection
    i: int
    j: int

    def __post_init__(self) -> None:
        if self.i < 1 or self.j < 1:
            msg = f"f(0)=0 を保つため i, j は1以上にしてください: {self.i}, {self.j}"
            raise ValueError(msg)

    @property
    def beta(self) -> Cnf:
        return self.base.beta

    @property
    def spec(self) -> str:
        return f"swap:{self.i}:{self.j}"

    def _swap(self, n: int) -> int:
        if n == self.i:
            return self.j
        if n == self.j:
            return self.i
        return n

    def __call__(self, n: int) -> Cnf:
        return self.base(self._swap(n))

    def inverse(self, gamma: Cnf) -> int:
        return self._swap(self.base.inverse(gamma))


class TableBijection(OmegaBijection):
    """先頭を表で与え、残りを重み順で埋める全単射。"""

    def __init__(self, table: Sequence[Cnf | int], beta: Cnf, source: str = "table") -> None:
        self.table = tuple(coerce(gamma) for gamma in table)
        self.source = source
        self._rest = WeightOrderBijection(beta)
        if not self.table or self.table[0] != ZERO:
            msg = "表の先頭は f(0)=0 である必要があります。"
            raise ValueError(msg)
        if len(set(self.table)) != len(self.table):
            msg = "表に同じ順序数が重複しています。"
            raise ValueError(msg)
        for gamma in self.table:
            self._check_target(gamma)

    @property
    def beta(self) -> Cnf:
        return self._rest.beta

    @property
    def spec(self) -> str:
        return f"file:{self.source}"

    def _rest_values(self) -> Iterator[Cnf]:
        used = set(self.table)
        return (gamma for gamma in map(self._rest, itertools.count()) if gamma not in used)

    def __call__(self, n: int) -> Cnf:
        if n < len(self.table):
            return self.table[n]
        return next(itertools.islice(self._rest_values(), n - len(self.table), None))

    def inverse(self, gamma: Cnf) -> int:
        if gamma in self.table:
            return self.table.index(gamma)
        position = self._rest.inverse(gamma)
        skipped = sum(1 for delta in self.table if self._rest.inverse(delta) < position)
        return len(self.table) + position - skipped


def default_bijection(beta: Cnf) -> OmegaBijection:
    """β = ω なら恒等写像、それ以外は重み順の全単射を返す。"""
    return IdentityBijection() if beta == OMEGA else WeightOrderBijection(beta)

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING, ClassVar

from ramsey_spaces.domain.alternation.ruler import sigma
from ramsey_spaces.domain.words.alphabet import Alphabet, FiniteAlphabet

if TYPE_CHECKING:
    from ramsey_spaces.domain.alternation.constraint import ConstraintSeq, RelationSpace
    from ramsey_spaces.domain.alternation.partition import Partition
    from ramsey_spaces.domain.eqrel.finite import FiniteEqRel
    from ramsey_spaces.domain.eqrel.stream import EqRelStream
    from ramsey_spaces.domain.words.word import Letter


class CodingError(ValueError):
    """語または端拡大が符号化に必要な形をしていない。"""


class _ArityTable:
    """t_0 = 2^{q_0+1}, t_i = t_{i-1}・2^{q_i+1} (q_i = σ(n+1+i)) をメモ化して返す。"""

    def __init__(self, n: int) -> None:
        self._n = n
        self._values: list[int] = []

    def q(self, i: int) -> int:
        return sigma(self._n + 1 + i)

    def t(self, i: int) -> int:
        while len(self._values) <= i:
            j = len(self._values)
            previous = self._values[-1] if self._values else 1
            self._values.append(previous * (1 << (self.q(j) + 1)))
        return self._values[i]


@dataclass(frozen=True)
class GradedCodingAlphabet(Alphabet):
    """L_0 = (n+1)^{t_0}, L_i = L_{i-1} ∪ (n+1)^{t_i} を遅延列挙する段付きアルファベット。"""

    n: int
    graded: ClassVar[bool] = True

    @cached_property
    def _table(self) -> _ArityTable:
        return _ArityTable(self.n)

    def arity(self, level: int) -> int:
        return self._table.t(level)

    def level_of_arity(self, arity: int) -> int | None:
        """arity = t_j となる j を返す。無ければ None。"""
        j = 0
        while (value := self._table.t(j)) <= arity:
            if value == arity:
                return j
            j += 1
        return None

    def contains(self, letter: Letter) -> bool:
        if not isinstance(letter, tuple):
            return False
        if self.level_of_arity(len(letter)) is None:
            return False
        return all(0 <= coordinate <= self.n for coordinate in letter)

    def variable_letters_at(self, level: int) -> tuple[Letter, ...]:
        return tuple(itertools.product(range(self.n + 1), repeat=self.arity(level)))

    def letters_at(self, level: int) -> tuple[Letter, ...]:
        return tuple(
            itertools.chain.from_iterable(self.variable_letters_at(j) for j in range(level + 1))
        )

    def letter_count_at(self, level: int) -> int:
        return sum((self.n + 1) ** self.arity(j) for j in range(level + 1))

    def to_dict(self) -> dict[str, object]:
        return {
            "kind": "graded-coding",
            "n": self.n,
            "arities": [self.arity(j) for j in range(4)],
        }


@dataclass(frozen=True)
class CodingContext:
    """a = r_n(E) の1クラス端拡大を語で符号化するための文脈。"""

    relation: EqRelStream
    space: RelationSpace
    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            msg = f"n は0以上にしてください: {self.n}"
            raise CodingError(msg)

    @classmethod
    def for_approximation(
        cls, a: FiniteEqRel, relation: EqRelStream, space: RelationSpace
    ) -> CodingContext:
        """a = r_{|a|}(E) を確認して文脈を作る。"""
        n = a.length
        if relation.approx(n) != a:
            msg = "a = r_n(E) の場合だけを扱います。a は E の近似ではありません。"
            raise CodingError(msg)
        return cls(relation, space, n)

    @property
    def partition(self) -> Partition:
        return self.space.partition

    @property
    def constraint(self) -> ConstraintSeq:
        return self.space.constraint

    @property
    def constrained(self) -> bool:
        return self.space.constrained

    @property
    def is_finite(self) -> bool:
        return self.partition.kind == "finite"

    @cached_property
    def a(self) -> FiniteEqRel:
        return self.relation.approx(self.n)

    @cached_property
    def _arities(self) -> _ArityTable:
        return _ArityTable(self.n)

    @property
    def l(self) -> int:  # noqa: E743
        blocks = self.partition.num_blocks
        if blocks is None:
            msg = "無限分割にはブロック数 l がありません。"
            raise CodingError(msg)
        return blocks

    def q(self, i: int) -> int:
        """p_{n+1+i}(E) が属するブロック番号 q_i。"""
        return self._arities.q(i)

    def t(self, i: int) -> int:
        return self._arities.t(i)

    def m_factor(self, i: int) -> int:
        """t_i = t_0・m_i となる m_i。"""
        return self.t(i) // self.t(0)

    @property
    def unit(self) -> int:
        """L_0 の1文字が符号化する代表元の個数 (l または t_0)。"""
        return self.l if self.is_finite else self.t(0)

    @cached_property
    def alphabet(self) -> Alphabet:
        if self.is_finite:
            return FiniteAlphabet.tuples(self.n + 1, self.l)
        return GradedCodingAlphabet(self.n)

    def variable_arity(self, index: int) -> int:
        """x_index の変数 v が占める長さ (l または t_index)。"""
        return self.l if self.is_finite else self.t(index)

    def rep(self, k: int) -> int:
        return self.relation.rep(k)

    def can_join_index(self, class_index: int, target_index: int) -> bool:
        """p_{class_index}(E) のクラスを p_{target_index}(E) へ併合できるか。"""
        return self.space.can_join(self.rep(class_index), self.rep(target_index))

    def check_block_sequence(self, count: int) -> None:
        """p_{n+1+i}(E) のブロックが q_i と一致するかを確かめる。"""
        for i in range(count):
            block = self.partition.classify(self.rep(self.n + 1 + i))
            expected = self.partition.pattern_block(self.n + 1 + i)
            if block != expected:
                msg = (
                    f"p_{self.n + 1 + i}(E) のブロック {block} が期待値 {expected} と異なります。"
                    " E は交代的ではありません。"
                )
                raise CodingError(msg)

    def describe(self) -> dict[str, object]:
        data: dict[str, object] = {
            "n": self.n,
            "partition": self.partition.spec,
            "constraint": self.constraint.spec,
            "unit": self.unit,
        }
        if self.is_finite:
            data["alphabet_size"] = (self.n + 1) ** self.l
        else:
            data["t"] = [self.t(i) for i in range(4)]
        return data

from __future__ import annotations

import itertools
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING, ClassVar

if TYPE_CHECKING:
    from ramsey_spaces.domain.words.word import Letter


class Alphabet(ABC):
    """有限アルファベット L、または有限集合の増大列 L_0 ⊆ L_1 ⊆ ... 。"""

    graded: ClassVar[bool] = False

    @abstractmethod
    def contains(self, letter: Letter) -> bool:
        """letter ∈ L かを返す。"""

    @abstractmethod
    def letters_at(self, level: int) -> tuple[Letter, ...]:
        """L_level を返す。有限アルファベットでは常に L。"""

    def variable_letters_at(self, level: int) -> tuple[Letter, ...]:
        """level 番目の変数語に使う定数文字。"""
        return self.letters_at(level)

    def letter_count_at(self, level: int) -> int:
        return len(self.letters_at(level))

    @abstractmethod
    def to_dict(self) -> dict[str, object]: ...


@dataclass(frozen=True)
class FiniteAlphabet(Alphabet):
    letters: tuple[Letter, ...]

    def __post_init__(self) -> None:
        if not self.letters:
            msg = "アルファベットが空です。"
            raise ValueError(msg)
        if len(set(self.letters)) != len(self.letters):
            msg = f"アルファベットに重複した文字があります: {self.letters}"
            raise ValueError(msg)

    @classmethod
    def digits(cls, size: int) -> FiniteAlphabet:
        """{0, ..., size-1} を返す。"""
        return cls(tuple(range(size)))

    @classmethod
    def tuples(cls, base: int, arity: int) -> FiniteAlphabet:
        """base^arity (長さ arity の {0..base-1} の組) を辞書式順で返す。"""
        return cls(tuple(itertools.product(range(base), repeat=arity)))

    def contains(self, letter: Letter) -> bool:
        return letter in self._index

    @cached_property
    def _index(self) -> frozenset[Letter]:
        return frozenset(self.letters)

    def letters_at(self, level: int) -> tuple[Letter, ...]:  # noqa: ARG002
        return self.letters

    def to_dict(self) -> dict[str, object]:
        return {"kind": "finite", "letters": [_letter_to_json(x) for x in self.letters]}


@dataclass(frozen=True)
class GradedAlphabet(Alphabet):
    """明示的に与えた L_0 ⊆ ... ⊆ L_{k-1}。それ以降は L_{k-1} が続く。"""

    levels: tuple[tuple[Letter, ...], ...]
    graded: ClassVar[bool] = True

    def __post_init__(self) -> None:
        if not self.levels or not self.levels[0]:
            msg = "L_0 が空です。"
            raise ValueError(msg)
        for i in range(1, len(self.levels)):
            if not set(self.levels[i - 1]) <= set(self.levels[i]):
                msg = f"L_{i - 1} ⊆ L_{i} が成り立ちません。"
                raise ValueError(msg)

    def contains(self, letter: Letter) -> bool:
        return letter in self.levels[-1]

    def letters_at(self, level: int) -> tuple[Letter, ...]:
        return self.levels[min(level, len(self.levels) - 1)]

    def to_dict(self) -> dict[str, object]:
        return {
            "kind": "graded",
            "levels": [[_letter_to_json(x) for x in level] for level in self.levels],
        }


def _letter_to_json(letter: Letter) -> object:
    return list(letter) if isinstance(letter, tuple) else letter


def letter_from_json(raw: object) -> Letter:
    """JSON の文字表現 (整数または整数リスト) を Letter に戻す。"""
    if isinstance(raw, bool):
        msg = f"文字として解釈できません: {raw!r}"
        raise ValueError(msg)  # noqa: TRY004
    if isinstance(raw, int):
        return raw
    if isinstance(raw, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in raw):
        return tuple(raw)
    msg = f"文字として解釈できません: {raw!r}"
    raise ValueError(msg)

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING

import numpy as np

from ramsey_spaces.domain.coding.codec import decode_word
from ramsey_spaces.domain.eqrel.finite import canonical_form, restricted_growth_strings

if TYPE_CHECKING:
    from ramsey_spaces.domain.coding.context import CodingContext
    from ramsey_spaces.domain.eqrel.finite import FiniteEqRel
    from ramsey_spaces.domain.words.alphabet import Alphabet
    from ramsey_spaces.domain.words.semigroup import Colouring
    from ramsey_spaces.domain.words.word import Letter, Word

MAX_DECISION_DEPTH = 10


@dataclass(frozen=True)
class ClopenColouring:
    """近似の最初の decision_depth 点だけで色が決まる r 色の塗り分け。

    色の表は制限成長列を辞書式順に並べ、seed から numpy の乱数で引く。
    """

    decision_depth: int
    colours: int
    seed: int

    def __post_init__(self) -> None:
        if not 0 <= self.decision_depth <= MAX_DECISION_DEPTH:
            msg = f"decision_depth は 0..{MAX_DECISION_DEPTH} にしてください: {self.decision_depth}"
            raise ValueError(msg)
        if self.colours < 1:
            msg = f"色の数は1以上にしてください: {self.colours}"
            raise ValueError(msg)

    @cached_property
    def _table(self) -> dict[tuple[int, ...], int]:
        keys = [
            canonical_form(rgs).assign
            for size in range(self.decision_depth + 1)
            for rgs in restricted_growth_strings(size)
        ]
        draws = np.random.default_rng(self.seed).integers(self.colours, size=len(keys))
        return dict(zip(keys, (int(colour) for colour in draws), strict=True))

    def colour(self, relation: FiniteEqRel) -> int:
        size = min(self.decision_depth, relation.m)
        return self._table[relation.prefix(size).assign]

    def to_dict(self) -> dict[str, object]:
        return {
            "decision_depth": self.decision_depth,
            "colours": self.colours,
            "seed": self.seed,
        }


class ExtensionPredicate(ABC):
    """r_{n+1}[a, E] の部分集合 O を与える判定。"""

    @property
    @abstractmethod
    def spec(self) -> str: ...

    @abstractmethod
    def holds(self, ctx: CodingContext, extension: FiniteEqRel) -> bool: ...

    def word_colouring(self, ctx: CodingContext) -> Colouring:
        """c(w) = 0 ⇔ b(w) ∈ O となる語の塗り分けを返す。"""

        def colour(word: Word) -> int:
            return 0 if self.holds(ctx, decode_word(ctx, word)) else 1

        return colour


class EverythingPredicate(ExtensionPredicate):
    @property
    def spec(self) -> str:
        return "all"

    def holds(self, ctx: CodingContext, extension: FiniteEqRel) -> bool:  # noqa: ARG002
        return True


@dataclass(frozen=True)
class FirstJoinPredicate(ExtensionPredicate):
    """最初に併合される p_{n+1}(E) のクラスが p_target(E) のクラスか。併合が無ければ真。"""

    target: int = 0

    @property
    def spec(self) -> str:
        return f"first-join:{self.target}"

    def holds(self, ctx: CodingContext, extension: FiniteEqRel) -> bool:
        first = ctx.rep(ctx.n + 1)
        if first >= extension.m:
            return True
        return extension.assign[first] == ctx.rep(self.target)


class LambdaParityPredicate(ExtensionPredicate):
    """λ = (m-n-1)/unit が偶数か。"""

    @property
    def spec(self) -> str:
        return "lambda-parity"

    def holds(self, ctx: CodingContext, extension: FiniteEqRel) -> bool:
        m = ctx.n + 1
        while ctx.rep(m) < extension.m:
            m += 1
        return ((m - ctx.n - 1) // ctx.unit) % 2 == 0


@dataclass(frozen=True)
class ClopenPredicate(ExtensionPredicate):
    """clopen な塗り分けで色 0 になる端拡大。"""

    colouring: ClopenColouring

    @property
    def spec(self) -> str:
        c = self.colouring
        return f"clopen:{c.decision_depth}:{c.colours}:{c.seed}"

    def holds(self, ctx: CodingContext, extension: FiniteEqRel) -> bool:  # noqa: ARG002
        return self.colouring.colour(extension) == 0


def constant_colouring(colour: int) -> Colouring:
    def paint(word: Word) -> int:  # noqa: ARG001
        return colour

    return paint


def length_mod_colouring(modulus: int) -> Colouring:
    if modulus < 1:
        msg = f"法は1以上にしてください: {modulus}"
        raise ValueError(msg)

    def paint(word: Word) -> int:
        return len(word) % modulus

    return paint


def first_letter_colouring(alphabet: Alphabet) -> Colouring:
    """空語は 0、それ以外は先頭の文字の L_0 での順位 + 1。"""
    letters = alphabet.letters_at(0)

    def paint(word: Word) -> int:
        if not len(word):
            return 0
        return letters.index(word[0]) + 1  # type: ignore[arg-type]

    return paint


def letter_count_colouring(letter: Letter, modulus: int) -> Colouring:
    if modulus < 1:
        msg = f"法は1以上にしてください: {modulus}"
        raise ValueError(msg)

    def paint(word: Word) -> int:
        return sum(1 for symbol in word if symbol == letter) % modulus

    return paint

from __future__ import annotations

import itertools
import math
from collections.abc import Callable
from dataclasses import dataclass
from typing import TYPE_CHECKING, Literal

from ramsey_spaces.domain.words.word import Word, concat

if TYPE_CHECKING:
    from collections.abc import Iterator, Sequence

    from ramsey_spaces.domain.words.alphabet import Alphabet
    from ramsey_spaces.domain.words.word import Letter

SemigroupMode = Literal["plain", "graded"]
Colouring = Callable[[Word], int]


class TranslateTooLargeError(ValueError):
    """列挙しようとした平行移動が上限を超える。"""


def _check_mode(alphabet: Alphabet, mode: SemigroupMode) -> None:
    if mode == "plain" and alphabet.graded:
        msg = "plain モードには有限アルファベットが必要です。"
        raise ValueError(msg)
    if mode not in ("plain", "graded"):
        msg = f"未知のモードです: {mode}"
        raise ValueError(msg)


def _index_sets(
    xs: Sequence[Word], mode: SemigroupMode, max_terms: int | None, room: int | None
) -> Iterator[tuple[int, ...]]:
    """使う変数語の添字列 n_0 < ... < n_k を返す。長さの合計が room を超えるものは除く。"""
    count = len(xs)
    top = count if max_terms is None else min(count, max_terms + 1)
    if mode == "graded":
        candidates: Iterator[tuple[int, ...]] = (tuple(range(j)) for j in range(1, top + 1))
    else:
        candidates = (
            indices
            for size in range(1, top + 1)
            for indices in itertools.combinations(range(count), size)
        )
    for indices in candidates:
        if room is None or sum(len(xs[i]) for i in indices) <= room:
            yield indices


def _letter_choices(
    indices: tuple[int, ...], alphabet: Alphabet, mode: SemigroupMode
) -> list[tuple[Letter, ...]]:
    if mode == "graded":
        return [alphabet.letters_at(position) for position in range(len(indices))]
    letters = alphabet.letters_at(0)
    return [letters] * len(indices)


def semigroup_size(
    xs: Sequence[Word],
    alphabet: Alphabet,
    mode: SemigroupMode,
    max_terms: int | None = None,
    room: int | None = None,
) -> int:
    """列挙される語の個数 (重複を含む) を数える。"""
    _check_mode(alphabet, mode)

    def count(position: int) -> int:
        return alphabet.letter_count_at(position if mode == "graded" else 0)

    return sum(
        math.prod(count(position) for position in range(len(indices)))
        for indices in _index_sets(xs, mode, max_terms, room)
    )


def iter_semigroup(
    xs: Sequence[Word],
    alphabet: Alphabet,
    mode: SemigroupMode,
    max_terms: int | None = None,
    room: int | None = None,
) -> Iterator[Word]:
    """[X]_L (plain) または [X]*_L (graded) の元を決まった順序で生成する。

    plain では任意の増加添字列と λ_i ∈ L、graded では先頭から連続する添字と λ_i ∈ L_i。
    """
    _check_mode(alphabet, mode)
    for indices in _index_sets(xs, mode, max_terms, room):
        for values in itertools.product(*_letter_choices(indices, alphabet, mode)):
            yield concat(
                *(xs[i].substitute(value) for i, value in zip(indices, values, strict=True))
            )


def enumerate_semigroup(
    xs: Sequence[Word],
    alphabet: Alphabet,
    mode: SemigroupMode,
    max_terms: int | None = None,
) -> frozenset[Word]:
    return frozenset(iter_semigroup(xs, alphabet, mode, max_terms))


def translate(
    w0: Word,
    xs: Sequence[Word],
    alphabet: Alphabet,
    mode: SemigroupMode,
    max_terms: int | None = None,
    len_budget: int | None = None,
) -> Iterator[Word]:
    """w0⌢[X] の元のうち長さが len_budget 以下のものを生成する。"""
    room = None if len_budget is None else len_budget - len(w0)
    if room is not None and room < 0:
        return
    for word in iter_semigroup(xs, alphabet, mode, max_terms, room):
        yield w0.concat(word)


@dataclass(frozen=True)
class Counterexample:
    """平行移動の中で色が異なった語。"""

    word: Word
    colour: int
    expected_colour: int


def verify_monochromatic(
    w0: Word,
    xs: Sequence[Word],
    colouring: Colouring,
    alphabet: Alphabet,
    mode: SemigroupMode,
    len_budget: int,
    *,
    include_base: bool = False,
    limit: int | None = None,
) -> Counterexample | None:
    """w0⌢[X] の長さ len_budget 以下の元が単色かを調べ、最初の反例を返す。

    include_base が真なら w0 自身も同じ色であることを要求する。
    """
    if limit is not None:
        size = semigroup_size(xs, alphabet, mode, room=len_budget - len(w0))
        if size > limit:
            msg = f"平行移動の元が {size} 個あり、上限 {limit} を超えています。"
            raise TranslateTooLargeError(msg)

    expected: int | None = None
    if include_base and len(w0) <= len_budget:
        expected = colouring(w0)
    for word in translate(w0, xs, alphabet, mode, len_budget=len_budget):
        colour = colouring(word)
        if expected is None:
            expected = colour
        elif colour != expected:
            return Counterexample(word, colour, expected)
    return None


def certificate_colour(
    w0: Word,
    xs: Sequence[Word],
    colouring: Colouring,
    alphabet: Alphabet,
    mode: SemigroupMode,
) -> int:
    """単色と確認済みの平行移動の色を返す。"""
    return colouring(next(translate(w0, xs, alphabet, mode), w0))

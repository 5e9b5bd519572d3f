from __future__ import annotations

import itertools
import logging
from collections.abc import Callable
from dataclasses import dataclass
from functools import cache
from typing import TYPE_CHECKING

from ramsey_spaces.domain.words.semigroup import certificate_colour, verify_monochromatic
from ramsey_spaces.domain.words.word import VARIABLE, Word

if TYPE_CHECKING:
    from collections.abc import Iterator, Sequence

    from ramsey_spaces.domain.words.alphabet import Alphabet, FiniteAlphabet
    from ramsey_spaces.domain.words.semigroup import Colouring, SemigroupMode
    from ramsey_spaces.domain.words.word import Letter

logger = logging.getLogger(__name__)

CandidateCallback = Callable[[int], None]
SizeCallback = Callable[[int], None]


def hj_line_search(alphabet: FiniteAlphabet, length: int, colouring: Colouring) -> Word | None:
    """L^length の組合せ直線 {x[λ] : λ ∈ L} で単色のものを辞書式順に探す。"""
    letters = alphabet.letters
    for symbols in itertools.product((VARIABLE, *letters), repeat=length):
        line = Word(symbols)
        if not line.is_variable():
            continue
        if len({colouring(line.substitute(letter)) for letter in letters}) == 1:
            return line
    return None


@dataclass(frozen=True)
class HJCertificate:
    """w0⌢[X] が予算内で単色になる (w0, X)。"""

    w0: Word
    xs: tuple[Word, ...]
    mode: SemigroupMode
    colour: int
    len_budget: int
    candidates_tried: int

    @property
    def size(self) -> int:
        return len(self.w0) + sum(len(x) for x in self.xs)


@dataclass(frozen=True)
class SearchExhausted:
    """予算内に証明書が無かったときの探索の到達範囲。"""

    k: int
    len_budget: int
    candidates_tried: int
    largest_size: int


@dataclass(frozen=True)
class SearchHooks:
    """探索の進行を外側へ知らせるHook群。キャンセルはここで例外を投げて行う。"""

    on_candidate: CandidateCallback | None = None
    on_size_started: SizeCallback | None = None


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """total を parts 個の正の整数の和に分ける方法を辞書式順に返す。"""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first, *rest)


def _plain_words(letters: Sequence[Letter], length: int) -> Iterator[Word]:
    for symbols in itertools.product(letters, repeat=length):
        yield Word(symbols)


def _left_variable_words(letters: Sequence[Letter], length: int) -> list[Word]:
    return [
        Word((VARIABLE, *rest))
        for rest in itertools.product((VARIABLE, *letters), repeat=length - 1)
    ]


class _CandidateSpace:
    """大きさ size の候補 (w0, X) を決まった順序で生成する。"""

    def __init__(self, alphabet: Alphabet, k: int) -> None:
        self._alphabet = alphabet
        self._k = k
        self._base_letters = alphabet.letters_at(0)
        self._variable_words = cache(self._build_variable_words)

    def _build_variable_words(self, level: int, length: int) -> list[Word]:
        return _left_variable_words(self._alphabet.variable_letters_at(level), length)

    def of_size(self, size: int) -> Iterator[tuple[Word, tuple[Word, ...]]]:
        for base_length in range(size - self._k, -1, -1):
            for parts in compositions(size - base_length, self._k):
                choices = [
                    self._variable_words(level, part) for level, part in enumerate(parts)
                ]
                for w0 in _plain_words(self._base_letters, base_length):
                    for xs in itertools.product(*choices):
                        yield w0, xs


def lv_hj_bounded_search(
    alphabet: Alphabet,
    colouring: Colouring,
    k: int,
    len_budget: int,
    *,
    mode: SemigroupMode | None = None,
    include_base: bool = False,
    translate_limit: int | None = None,
    hooks: SearchHooks | None = None,
) -> HJCertificate | SearchExhausted:
    """w0 と k 個の左変数語 X で w0⌢[X] が単色になるものを探す。

    |w0| + Σ|x_i| <= len_budget の範囲を、合計の大きさ、|w0| の降順、
    各 |x_i| の辞書式順、語の辞書式順 (v が先頭) で決定的に走査する。
    """
    if k < 1:
        msg = f"k は1以上にしてください: {k}"
        raise ValueError(msg)
    if len_budget < 0:
        msg = f"len_budget は0以上にしてください: {len_budget}"
        raise ValueError(msg)

    resolved_mode: SemigroupMode = mode or ("graded" if alphabet.graded else "plain")
    hooks = hooks or SearchHooks()
    cached_colouring = cache(colouring)
    candidates = _CandidateSpace(alphabet, k)

    tried = 0
    largest = 0
    for size in range(k, len_budget + 1):
        largest = size
        if hooks.on_size_started is not None:
            hooks.on_size_started(size)
        logger.debug("lv_hj_bounded_search: size=%d tried=%d", size, tried)
        for w0, xs in candidates.of_size(size):
            tried += 1
            if hooks.on_candidate is not None:
                hooks.on_candidate(tried)
            counterexample = verify_monochromatic(
                w0,
                xs,
                cached_colouring,
                alphabet,
                resolved_mode,
                len_budget,
                include_base=include_base,
                limit=translate_limit,
            )
            if counterexample is None:
                colour = certificate_colour(w0, xs, cached_colouring, alphabet, resolved_mode)
                logger.info("証明書を発見: size=%d, 試行 %d 件", size, tried)
                return HJCertificate(w0, xs, resolved_mode, colour, len_budget, tried)

    logger.info("予算 %d 以内に証明書はありません (試行 %d 件)。", len_budget, tried)
    return SearchExhausted(k, len_budget, tried, largest)

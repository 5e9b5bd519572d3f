from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Final

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator

    from ramsey_spaces.domain.words.alphabet import Alphabet


class _Variable:
    """変数 v を表すシングルトン。"""

    _instance: _Variable | None = None

    def __new__(cls) -> _Variable:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "v"

    def __reduce__(self) -> str:
        return "VARIABLE"


VARIABLE: Final = _Variable()

Letter = int | tuple[int, ...]
Symbol = Letter | _Variable


def is_variable_symbol(symbol: Symbol) -> bool:
    return symbol is VARIABLE


@dataclass(frozen=True)
class Word:
    """アルファベット L ∪ {v} 上の有限語。"""

    letters: tuple[Symbol, ...] = ()

    @classmethod
    def of(cls, symbols: Iterable[Symbol]) -> Word:
        return cls(tuple(symbols))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Symbol]:
        return iter(self.letters)

    def __getitem__(self, index: int) -> Symbol:
        return self.letters[index]

    def is_variable(self) -> bool:
        """v を1つ以上含むか。"""
        return any(symbol is VARIABLE for symbol in self.letters)

    def is_left_variable(self) -> bool:
        """先頭の文字が v か。"""
        return bool(self.letters) and self.letters[0] is VARIABLE

    def variable_positions(self) -> tuple[int, ...]:
        return tuple(i for i, symbol in enumerate(self.letters) if symbol is VARIABLE)

    def concat(self, other: Word) -> Word:
        return Word(self.letters + other.letters)

    def substitute(self, value: Symbol, alphabet: Alphabet | None = None) -> Word:
        """全ての v を value に置き換えた x[value] を返す。"""
        if alphabet is not None and value is not VARIABLE and not alphabet.contains(value):
            msg = f"文字 {value!r} はアルファベットに含まれません。"
            raise ValueError(msg)
        if value is VARIABLE or not self.is_variable():
            return self
        return Word(tuple(value if symbol is VARIABLE else symbol for symbol in self.letters))

    def __repr__(self) -> str:
        return f"Word({''.join(repr(symbol) for symbol in self.letters) or 'ε'})"


EMPTY_WORD: Final = Word()


def concat(*words: Word) -> Word:
    """語を順に連結する。"""
    return Word(tuple(symbol for word in words for symbol in word.letters))


def substitute(word: Word, value: Symbol, alphabet: Alphabet | None = None) -> Word:
    return word.substitute(value, alphabet)

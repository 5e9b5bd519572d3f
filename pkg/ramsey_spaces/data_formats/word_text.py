from __future__ import annotations

import re
from typing import TYPE_CHECKING

from ramsey_spaces.domain.words.word import VARIABLE, Word

if TYPE_CHECKING:
    from ramsey_spaces.domain.words.word import Letter, Symbol

EMPTY_WORD_TEXT = "ε"
VARIABLE_TEXT = "v"
LETTER_SEPARATOR = "."

_TUPLE_PATTERN = re.compile(r"^\((\s*\d+\s*(?:,\s*\d+\s*)*)?,?\)$")


def format_letter(letter: Letter) -> str:
    if isinstance(letter, tuple):
        return "(" + ",".join(str(coordinate) for coordinate in letter) + ")"
    return str(letter)


def _format_symbol(symbol: Symbol) -> str:
    if symbol is VARIABLE:
        return VARIABLE_TEXT
    return format_letter(symbol)  # type: ignore[arg-type]


def format_word(word: Word) -> str:
    """語を文字列にする。組の文字か2桁以上の数字を含むときだけ "." で区切る。"""
    if not len(word):
        return EMPTY_WORD_TEXT
    separated = any(
        isinstance(symbol, tuple) or (isinstance(symbol, int) and symbol > 9) for symbol in word
    )
    joiner = LETTER_SEPARATOR if separated else ""
    return joiner.join(_format_symbol(symbol) for symbol in word)


def parse_letter(text: str) -> Letter:
    token = text.strip()
    if token.isdigit():
        return int(token)
    match = _TUPLE_PATTERN.match(token)
    if match is None:
        msg = f"文字として解釈できません: {text!r}"
        raise ValueError(msg)
    body = match.group(1) or ""
    return tuple(int(part) for part in body.split(",") if part.strip())


def _parse_symbol(token: str) -> Symbol:
    if token.strip() == VARIABLE_TEXT:
        return VARIABLE
    return parse_letter(token)


def parse_word(text: str) -> Word:
    """format_word の逆。"ε" と空文字列は空語になる。"""
    stripped = text.strip()
    if stripped in {"", EMPTY_WORD_TEXT}:
        return Word()
    if LETTER_SEPARATOR in stripped or "(" in stripped:
        tokens = stripped.split(LETTER_SEPARATOR)
    else:
        tokens = list(stripped)
    return Word(tuple(_parse_symbol(token) for token in tokens))

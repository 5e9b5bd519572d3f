from __future__ import annotations

import re

from ramsey_spaces.domain.ordinals.cnf import ZERO, Cnf, format_cnf
from ramsey_spaces.domain.ordinals.ordinal_eqrel import OrdinalElem

_FINITE_EXPONENT = re.compile(r"^\d+$")
_ELEM_PATTERN = re.compile(r"^\(\s*(\d+)\s*,(.*)\)$")


def _split_top_level(text: str, separator: str) -> list[str]:
    """{} の外にある separator で分割する。"""
    parts: list[str] = []
    depth = 0
    current: list[str] = []
    for char in text:
        if char == "{":
            depth += 1
        elif char == "}":
            depth -= 1
            if depth < 0:
                msg = f"括弧の対応が取れていません: {text!r}"
                raise ValueError(msg)
        if char == separator and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(char)
    if depth != 0:
        msg = f"括弧の対応が取れていません: {text!r}"
        raise ValueError(msg)
    parts.append("".join(current))
    return parts


def _parse_coefficient(text: str) -> int:
    token = text.strip()
    if not token.isdigit() or int(token) == 0:
        msg = f"係数は正の整数である必要があります: {text!r}"
        raise ValueError(msg)
    return int(token)


def _parse_exponent(text: str) -> Cnf:
    token = text.strip()
    if token.startswith("{") and token.endswith("}"):
        return parse_cnf(token[1:-1])
    if _FINITE_EXPONENT.match(token):
        return Cnf.of(int(token))
    msg = f"指数を解釈できません: {text!r}"
    raise ValueError(msg)


def _parse_term(text: str) -> Cnf:
    body, *coefficient = _split_top_level(text.strip(), "*")
    if len(coefficient) > 1:
        msg = f"項を解釈できません: {text!r}"
        raise ValueError(msg)
    factor = _parse_coefficient(coefficient[0]) if coefficient else 1
    body = body.strip()
    if body.isdigit():
        if coefficient:
            msg = f"有限の項に係数は付けられません: {text!r}"
            raise ValueError(msg)
        return Cnf.of(int(body))
    if body[:1] not in {"w", "ω"}:
        msg = f"項は w で始まる必要があります: {text!r}"
        raise ValueError(msg)
    rest = body[1:].strip()
    if not rest:
        return Cnf.power(1, factor)
    if not rest.startswith("^"):
        msg = f"項を解釈できません: {text!r}"
        raise ValueError(msg)
    exponent = _parse_exponent(rest[1:])
    if exponent.is_zero:
        return Cnf.of(factor)
    return Cnf.power(exponent, factor)


def parse_cnf(text: str) -> Cnf:
    """`w^2*3 + w*5 + 3` の形の文字列を順序数に戻す。

    項は順序数の和として足し合わせるため、非標準的な並びも受け付ける。
    """
    stripped = text.strip()
    if not stripped:
        msg = "順序数の文字列が空です。"
        raise ValueError(msg)
    result = ZERO
    for part in _split_top_level(stripped, "+"):
        result += _parse_term(part)
    return result


def format_elem(elem: OrdinalElem) -> str:
    return f"({elem.n}, {format_cnf(elem.copy)})"


def parse_elem(text: str) -> OrdinalElem:
    """`(n, <cnf>)` を読む。"""
    match = _ELEM_PATTERN.match(text.strip())
    if match is None:
        msg = f"順序数の元は (n, <cnf>) の形である必要があります: {text!r}"
        raise ValueError(msg)
    return OrdinalElem(int(match.group(1)), parse_cnf(match.group(2)))

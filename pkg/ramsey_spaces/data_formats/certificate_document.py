from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, cast

from ramsey_spaces.data_formats.word_text import format_word, parse_word
from ramsey_spaces.domain.coding.context import GradedCodingAlphabet
from ramsey_spaces.domain.words.alphabet import (
    Alphabet,
    FiniteAlphabet,
    GradedAlphabet,
    letter_from_json,
)

if TYPE_CHECKING:
    from ramsey_spaces.domain.words.hales_jewett import HJCertificate
    from ramsey_spaces.domain.words.semigroup import SemigroupMode
    from ramsey_spaces.domain.words.word import Word

CERTIFICATE_MODES = ("plain", "graded")


def alphabet_from_dict(raw: object) -> Alphabet:
    """Alphabet.to_dict の逆。"""
    if not isinstance(raw, dict):
        msg = "alphabet はオブジェクトである必要があります。"
        raise ValueError(msg)  # noqa: TRY004
    kind = raw.get("kind")
    if kind == "finite":
        return FiniteAlphabet(tuple(letter_from_json(x) for x in _as_list(raw, "letters")))
    if kind == "graded":
        levels = _as_list(raw, "levels")
        if not all(isinstance(level, list) for level in levels):
            msg = "levels の各要素は文字のリストである必要があります。"
            raise ValueError(msg)
        return GradedAlphabet(
            tuple(tuple(letter_from_json(x) for x in level) for level in levels)
        )
    if kind == "graded-coding":
        n = raw.get("n")
        if not isinstance(n, int) or isinstance(n, bool):
            msg = "graded-coding アルファベットには整数の n が必要です。"
            raise ValueError(msg)
        return GradedCodingAlphabet(n)
    msg = f"未知のアルファベットの種類です: {kind!r}"
    raise ValueError(msg)


def _as_list(raw: dict[str, Any], key: str) -> list[Any]:
    value = raw.get(key)
    if not isinstance(value, list):
        msg = f"{key} はリストである必要があります。"
        raise ValueError(msg)  # noqa: TRY004
    return value


@dataclass(frozen=True)
class CertificateDocument:
    """証明書ファイル {"w0", "X", "alphabet", "mode"} の保存モデル。"""

    w0: Word
    xs: tuple[Word, ...]
    alphabet: Alphabet
    mode: SemigroupMode

    @classmethod
    def from_certificate(
        cls, certificate: HJCertificate, alphabet: Alphabet
    ) -> CertificateDocument:
        return cls(certificate.w0, certificate.xs, alphabet, certificate.mode)

    @classmethod
    def from_dict(cls, raw: object) -> CertificateDocument:
        if not isinstance(raw, dict):
            msg = "証明書はオブジェクトである必要があります。"
            raise ValueError(msg)  # noqa: TRY004
        w0 = raw.get("w0")
        if not isinstance(w0, str):
            msg = "w0 は語の文字列である必要があります。"
            raise ValueError(msg)  # noqa: TRY004
        xs = []
        for text in _as_list(raw, "X"):
            if not isinstance(text, str):
                msg = "X の要素は語の文字列である必要があります。"
                raise ValueError(msg)  # noqa: TRY004
            xs.append(parse_word(text))
        mode = raw.get("mode", "plain")
        if mode not in CERTIFICATE_MODES:
            msg = f"mode は plain か graded である必要があります: {mode!r}"
            raise ValueError(msg)
        return cls(
            parse_word(w0),
            tuple(xs),
            alphabet_from_dict(raw.get("alphabet")),
            cast("SemigroupMode", mode),
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "w0": format_word(self.w0),
            "X": [format_word(x) for x in self.xs],
            "alphabet": self.alphabet.to_dict(),
            "mode": self.mode,
        }

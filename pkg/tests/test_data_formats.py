import json
from pathlib import Path

import pytest

from ramsey_spaces.data_formats.certificate_document import (
    CertificateDocument,
    alphabet_from_dict,
)
from ramsey_spaces.data_formats.eqrel_text import (
    eqrel_to_dict,
    format_eqrel,
    parse_eqrel,
)
from ramsey_spaces.data_formats.report_document import (
    ExperimentReport,
    render_json,
    render_text,
)
from ramsey_spaces.data_formats.word_text import format_word, parse_word
from ramsey_spaces.domain.coding import GradedCodingAlphabet
from ramsey_spaces.domain.eqrel import FiniteEqRel
from ramsey_spaces.domain.words import VARIABLE, FiniteAlphabet, GradedAlphabet, Word
from ramsey_spaces.infrastructure.storage.certificate_file import (
    load_certificate,
    save_certificate,
)

v = VARIABLE


def test_parse_eqrel_accepts_text_and_json() -> None:
    expected = FiniteEqRel((0, 1, 0, 3))

    assert parse_eqrel("0 1 0 3") == expected
    assert parse_eqrel("0,1,0,3") == expected
    assert parse_eqrel('{"m": 4, "assign": [0, 1, 0, 3]}') == expected
    assert format_eqrel(expected) == "0 1 0 3"
    assert eqrel_to_dict(expected) == {"m": 4, "assign": [0, 1, 0, 3]}


@pytest.mark.parametrize(
    "text",
    ["0 x", '{"m": 3, "assign": [0, 1]}', '{"assign": 3}', "{broken", "0 0 1"],
)
def test_parse_eqrel_rejects_malformed_text(text: str) -> None:
    with pytest.raises(ValueError):  # noqa: PT011
        parse_eqrel(text)


@pytest.mark.parametrize(
    ("word", "text"),
    [
        (Word(), "ε"),
        (Word((v, 0, 1)), "v01"),
        (Word((1, 12)), "1.12"),
        (Word((v, (0, 1))), "v.(0,1)"),
        (Word(((0, 1), (1, 0))), "(0,1).(1,0)"),
    ],
)
def test_word_text_format(word: Word, text: str) -> None:
    assert format_word(word) == text
    assert parse_word(text) == word


def test_parse_word_rejects_unknown_symbols() -> None:
    with pytest.raises(ValueError, match="文字"):
        parse_word("v0x")


def test_report_json_is_sorted_and_newline_terminated() -> None:
    report = ExperimentReport("decode", "ok", {"word": "ε"}, {"classes": 1, "extension": "0"})

    text = render_json(report)

    assert text.endswith("}\n")
    assert json.loads(text) == {
        "schema_version": 1,
        "verb": "decode",
        "status": "ok",
        "inputs": {"word": "ε"},
        "result": {"classes": 1, "extension": "0"},
    }
    assert text.index('"inputs"') < text.index('"result"') < text.index('"status"')


def test_report_text_flattens_nested_values() -> None:
    report = ExperimentReport(
        "validate",
        "violation",
        {"depth": 2},
        {"violations": [{"k": 1, "ok": False}], "prefix": None, "ys": ["v0", "0v"]},
        seed=5,
    )

    assert render_text(report) == (
        "validate: violation\n"
        "inputs.depth: 2\n"
        "result.prefix: -\n"
        "result.violations[0].k: 1\n"
        "result.violations[0].ok: no\n"
        "result.ys: v0, 0v\n"
        "schema_version: 1\n"
        "seed: 5\n"
    )


def test_report_wall_time_is_only_present_when_requested() -> None:
    report = ExperimentReport("miniature", "ok", {})

    assert "wall_time_sec" not in report.to_dict()
    assert report.with_wall_time(0.1234567).to_dict()["wall_time_sec"] == 0.123457


@pytest.mark.parametrize(
    "alphabet",
    [
        FiniteAlphabet.digits(3),
        FiniteAlphabet.tuples(2, 2),
        GradedAlphabet(((0,), (0, 1))),
        GradedCodingAlphabet(1),
    ],
)
def test_alphabet_dict_round_trip(alphabet: object) -> None:
    assert alphabet_from_dict(alphabet.to_dict()) == alphabet  # type: ignore[attr-defined]


def test_alphabet_from_dict_rejects_unknown_kind() -> None:
    with pytest.raises(ValueError, match="未知"):
        alphabet_from_dict({"kind": "other"})


def test_certificate_file_round_trip(tmp_path: Path) -> None:
    document = CertificateDocument(
        Word(((0, 1),)),
        (Word((v,)), Word((v, (1, 1)))),
        FiniteAlphabet.tuples(2, 2),
        "plain",
    )

    path = save_certificate(document, tmp_path / "certs" / "c.json")

    assert path.exists()
    assert json.loads(path.read_text(encoding="utf-8"))["X"] == ["v", "v.(1,1)"]
    assert load_certificate(path) == document


def test_load_certificate_reports_unreadable_file(tmp_path: Path) -> None:
    broken = tmp_path / "broken.json"
    broken.write_text("{", encoding="utf-8")

    with pytest.raises(ValueError, match="読めません"):
        load_certificate(broken)
    with pytest.raises(ValueError, match="読めません"):
        load_certificate(tmp_path / "missing.json")


def test_certificate_document_validates_fields() -> None:
    with pytest.raises(ValueError, match="mode"):
        CertificateDocument.from_dict(
            {"w0": "ε", "X": ["v"], "alphabet": {"kind": "finite", "letters": [0]}, "mode": "x"}
        )
    with pytest.raises(ValueError, match="X"):
        CertificateDocument.from_dict({"w0": "ε", "X": [1]})

import json
from pathlib import Path

import pytest

from ramsey_spaces.bootstrap import create_report_sink, create_settings
from ramsey_spaces.data_formats.report_document import ExperimentReport
from ramsey_spaces.infrastructure.config.defaults import DEFAULT_SETTINGS_ENV
from ramsey_spaces.infrastructure.storage.report_writer import (
    FileReportWriter,
    StreamReportWriter,
)


def test_create_report_sink_writes_to_stdout_without_out_option() -> None:
    """--out が無ければ標準出力向けのシンクを作る。"""
    assert isinstance(create_report_sink(), StreamReportWriter)


def test_create_report_sink_writes_report_file(tmp_path: Path) -> None:
    """--out があれば親ディレクトリごとファイルを作って書き込む。"""
    target = tmp_path / "reports" / "result.json"

    sink = create_report_sink(target)
    sink.write(ExperimentReport("divide-omega", "ok", {"alpha": "w"}), "json")

    assert isinstance(sink, FileReportWriter)
    assert json.loads(target.read_text(encoding="utf-8"))["verb"] == "divide-omega"
    assert b"\r\n" not in target.read_bytes()


def test_create_settings_reads_environment_variable(
    tmp_path: Path, monkeypatch: pytest.MonkeyPatch
) -> None:
    """環境変数で指定した settings.json を読む。"""
    settings_path = tmp_path / "custom.json"
    settings_path.write_text(json.dumps({"experiments": {"seed": 9}}), encoding="utf-8")
    monkeypatch.setenv(DEFAULT_SETTINGS_ENV, str(settings_path))

    assert create_settings().experiments.seed == 9


def test_create_settings_uses_defaults_in_empty_directory(
    tmp_path: Path, monkeypatch: pytest.MonkeyPatch
) -> None:
    monkeypatch.delenv(DEFAULT_SETTINGS_ENV, raising=False)
    monkeypatch.chdir(tmp_path)

    assert create_settings().search.depth == 8

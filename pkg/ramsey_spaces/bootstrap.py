from __future__ import annotations

from typing import TYPE_CHECKING

from ramsey_spaces.infrastructure.config.json_store import AppSettings
from ramsey_spaces.infrastructure.storage.report_writer import (
    FileReportWriter,
    StreamReportWriter,
)

if TYPE_CHECKING:
    from pathlib import Path

    from ramsey_spaces.application.ports.report_sink import ReportSink
    from ramsey_spaces.infrastructure.config.schema import AppSettingsData


def create_settings(explicit: str | Path | None = None) -> AppSettingsData:
    """--settings、環境変数、カレントの settings.json の順に設定を読む。"""
    return AppSettings.load(explicit)


def create_report_sink(out: str | Path | None = None) -> ReportSink:
    """--out があればファイルへ、無ければ標準出力へ書くシンクを作る。"""
    if out is None:
        return StreamReportWriter()
    return FileReportWriter(out)

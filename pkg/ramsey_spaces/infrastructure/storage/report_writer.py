from __future__ import annotations

import logging
import sys
from pathlib import Path
from typing import TYPE_CHECKING, TextIO

from ramsey_spaces.data_formats.report_document import render

if TYPE_CHECKING:
    from ramsey_spaces.data_formats.report_document import ExperimentReport, ReportFormat

logger = logging.getLogger(__name__)


class StreamReportWriter:
    """レポートを標準出力などのテキストストリームへ書く。"""

    def __init__(self, stream: TextIO | None = None) -> None:
        self._stream = stream

    def write(self, report: ExperimentReport, output_format: ReportFormat) -> None:
        stream = self._stream or sys.stdout
        stream.write(render(report, output_format))
        stream.flush()


class FileReportWriter:
    """--out で指定されたファイルへレポートを書く。親ディレクトリは作成する。"""

    def __init__(self, path: str | Path) -> None:
        self.path = Path(path)

    def write(self, report: ExperimentReport, output_format: ReportFormat) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        # 改行は LF に固定する
        with self.path.open("w", encoding="utf-8", newline="\n") as f:
            f.write(render(report, output_format))
        logger.info("レポートを保存しました: %s", self.path)

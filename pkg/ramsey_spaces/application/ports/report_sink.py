from __future__ import annotations

from typing import TYPE_CHECKING, Protocol

if TYPE_CHECKING:
    from ramsey_spaces.data_formats.report_document import ExperimentReport, ReportFormat


class ReportSink(Protocol):
    """実験レポートの出力先のPort。"""

    def write(self, report: ExperimentReport, output_format: ReportFormat) -> None:
        """レポートを指定の形式で書き出す。"""
        ...

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Any, Literal

SCHEMA_VERSION = 1

ReportStatus = Literal["ok", "found", "certified", "exhausted", "violation", "failed"]
ReportFormat = Literal["text", "json"]
REPORT_FORMATS: tuple[ReportFormat, ...] = ("text", "json")


@dataclass(frozen=True)
class ExperimentReport:
    """1回のCLI実行の結果。同じ入力とシードからは同じバイト列になる。

    wall_time_sec は --timing を指定したときだけ設定する。
    """

    verb: str
    status: ReportStatus
    inputs: dict[str, Any]
    result: dict[str, Any] = field(default_factory=dict)
    seed: int | None = None
    wall_time_sec: float | None = None

    def with_wall_time(self, seconds: float) -> ExperimentReport:
        return replace(self, wall_time_sec=round(seconds, 6))

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "schema_version": SCHEMA_VERSION,
            "verb": self.verb,
            "status": self.status,
            "inputs": self.inputs,
            "result": self.result,
        }
        if self.seed is not None:
            data["seed"] = self.seed
        if self.wall_time_sec is not None:
            data["wall_time_sec"] = self.wall_time_sec
        return data


def render_json(report: ExperimentReport) -> str:
    return json.dumps(report.to_dict(), ensure_ascii=False, sort_keys=True, indent=2) + "\n"


def _text_lines(value: object, prefix: str) -> list[str]:
    if isinstance(value, dict):
        lines: list[str] = []
        for key in sorted(value):
            lines.extend(_text_lines(value[key], f"{prefix}.{key}" if prefix else str(key)))
        return lines
    if isinstance(value, list) and any(isinstance(item, (dict, list)) for item in value):
        lines = []
        for i, item in enumerate(value):
            lines.extend(_text_lines(item, f"{prefix}[{i}]"))
        return lines or [f"{prefix}: []"]
    if isinstance(value, list):
        return [f"{prefix}: " + ", ".join(_scalar(item) for item in value)]
    return [f"{prefix}: {_scalar(value)}"]


def _scalar(value: object) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def render_text(report: ExperimentReport) -> str:
    """キーをドットでつないだ "key: value" 行の並び。"""
    data = report.to_dict()
    header = f"{report.verb}: {report.status}"
    body = _text_lines({key: data[key] for key in data if key not in {"verb", "status"}}, "")
    return "\n".join([header, *body]) + "\n"


def render(report: ExperimentReport, output_format: ReportFormat) -> str:
    if output_format == "json":
        return render_json(report)
    return render_text(report)

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, cast

from ramsey_spaces.data_formats.report_document import REPORT_FORMATS, ReportFormat
from ramsey_spaces.infrastructure.config.defaults import (
    DEFAULT_CORPUS_SIZE,
    DEFAULT_EXTENSION_LIMIT,
    DEFAULT_MAX_TERMS,
    DEFAULT_MINIATURE_SAMPLES,
    DEFAULT_MINIATURE_THRESHOLD,
    DEFAULT_OUTPUT_FORMAT,
    DEFAULT_OUTPUT_TIMING,
    DEFAULT_PIGEONHOLE_COLOURINGS,
    DEFAULT_SCAN_LIMIT,
    DEFAULT_SEARCH_BUDGET,
    DEFAULT_SEARCH_DEPTH,
    DEFAULT_SEARCH_K,
    DEFAULT_SEED,
    DEFAULT_TRANSLATE_LIMIT,
    DEFAULT_WORKERS,
)


def _as_mapping(value: object) -> dict[str, Any]:
    """JSON由来の任意値をdictとして安全に扱うための正規化。"""
    if isinstance(value, dict):
        return cast("dict[str, Any]", value)

    return {}


def _optional_section(data: dict[str, Any], key: str) -> dict[str, Any] | None:
    """存在すればdictとして返し、欠落時だけNoneを返す。"""
    value = data.get(key)
    if value is None:
        return None

    if isinstance(value, dict):
        return cast("dict[str, Any]", value)

    msg = f"settings section must be an object: {key}"
    raise ValueError(msg)


def _optional_int(value: object) -> int | None:
    return None if value is None else int(cast("int", value))


def _require_positive(name: str, value: int) -> None:
    if value < 1:
        msg = f"{name} は1以上にしてください: {value}"
        raise ValueError(msg)


@dataclass(frozen=True)
class SearchSettings:
    """探索の深さと予算。"""

    depth: int = DEFAULT_SEARCH_DEPTH
    budget: int = DEFAULT_SEARCH_BUDGET
    k: int = DEFAULT_SEARCH_K
    max_terms: int | None = DEFAULT_MAX_TERMS
    scan_limit: int = DEFAULT_SCAN_LIMIT
    translate_limit: int | None = DEFAULT_TRANSLATE_LIMIT
    extension_limit: int | None = DEFAULT_EXTENSION_LIMIT

    def __post_init__(self) -> None:
        _require_positive("depth", self.depth)
        _require_positive("k", self.k)
        _require_positive("scan_limit", self.scan_limit)
        if self.budget < 0:
            msg = f"budget は0以上にしてください: {self.budget}"
            raise ValueError(msg)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> SearchSettings:
        defaults = cls()
        return cls(
            depth=int(data.get("depth", defaults.depth)),
            budget=int(data.get("budget", defaults.budget)),
            k=int(data.get("k", defaults.k)),
            max_terms=_optional_int(data.get("max_terms", defaults.max_terms)),
            scan_limit=int(data.get("scan_limit", defaults.scan_limit)),
            translate_limit=_optional_int(data.get("translate_limit", defaults.translate_limit)),
            extension_limit=_optional_int(data.get("extension_limit", defaults.extension_limit)),
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "depth": self.depth,
            "budget": self.budget,
            "k": self.k,
            "max_terms": self.max_terms,
            "scan_limit": self.scan_limit,
            "translate_limit": self.translate_limit,
            "extension_limit": self.extension_limit,
        }


@dataclass(frozen=True)
class ExperimentSettings:
    """シード、並列数、ミニチュアの抽出閾値などの実験条件。"""

    seed: int = DEFAULT_SEED
    workers: int = DEFAULT_WORKERS
    miniature_threshold: int = DEFAULT_MINIATURE_THRESHOLD
    miniature_samples: int = DEFAULT_MINIATURE_SAMPLES
    pigeonhole_colourings: int = DEFAULT_PIGEONHOLE_COLOURINGS
    corpus_size: int = DEFAULT_CORPUS_SIZE

    def __post_init__(self) -> None:
        _require_positive("workers", self.workers)
        _require_positive("miniature_threshold", self.miniature_threshold)
        _require_positive("miniature_samples", self.miniature_samples)
        _require_positive("pigeonhole_colourings", self.pigeonhole_colourings)
        _require_positive("corpus_size", self.corpus_size)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> ExperimentSettings:
        defaults = cls()
        miniature = _as_mapping(data.get("miniature"))
        return cls(
            seed=int(data.get("seed", defaults.seed)),
            workers=int(data.get("workers", defaults.workers)),
            miniature_threshold=int(miniature.get("threshold", defaults.miniature_threshold)),
            miniature_samples=int(miniature.get("samples", defaults.miniature_samples)),
            pigeonhole_colourings=int(
                data.get("pigeonhole_colourings", defaults.pigeonhole_colourings)
            ),
            corpus_size=int(data.get("corpus_size", defaults.corpus_size)),
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "seed": self.seed,
            "workers": self.workers,
            "miniature": {
                "threshold": self.miniature_threshold,
                "samples": self.miniature_samples,
            },
            "pigeonhole_colourings": self.pigeonhole_colourings,
            "corpus_size": self.corpus_size,
        }


@dataclass(frozen=True)
class OutputSettings:
    format: ReportFormat = DEFAULT_OUTPUT_FORMAT
    timing: bool = DEFAULT_OUTPUT_TIMING

    def __post_init__(self) -> None:
        if self.format not in REPORT_FORMATS:
            msg = f"出力形式は text か json にしてください: {self.format}"
            raise ValueError(msg)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> OutputSettings:
        defaults = cls()
        return cls(
            format=cast("ReportFormat", str(data.get("format", defaults.format))),
            timing=bool(data.get("timing", defaults.timing)),
        )

    def to_dict(self) -> dict[str, Any]:
        return {"format": self.format, "timing": self.timing}


@dataclass(frozen=True)
class AppSettingsData:
    """settings.json 全体の設定モデル。"""

    search: SearchSettings = field(default_factory=SearchSettings)
    experiments: ExperimentSettings = field(default_factory=ExperimentSettings)
    output: OutputSettings = field(default_factory=OutputSettings)
    schema_version: int = 1

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> AppSettingsData:
        return AppSettingsParser(data).parse()

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema_version": self.schema_version,
            "search": self.search.to_dict(),
            "experiments": self.experiments.to_dict(),
            "output": self.output.to_dict(),
        }


class AppSettingsParser:
    """settings.jsonのdictを設定モデルへ変換する境界。

    セクションが欠けていれば既定値を使い、オブジェクト以外なら ValueError にする。
    """

    def __init__(self, data: dict[str, Any]) -> None:
        self.data = data

    def parse(self) -> AppSettingsData:
        schema_version = int(self.data.get("schema_version", 1))
        if schema_version != 1:
            msg = f"未対応の schema_version です: {schema_version}"
            raise ValueError(msg)
        return AppSettingsData(
            search=SearchSettings.from_dict(self._section("search")),
            experiments=ExperimentSettings.from_dict(self._section("experiments")),
            output=OutputSettings.from_dict(self._section("output")),
            schema_version=schema_version,
        )

    def _section(self, key: str) -> dict[str, Any]:
        return _optional_section(self.data, key) or {}

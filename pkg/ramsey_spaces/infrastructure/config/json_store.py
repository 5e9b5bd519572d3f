from __future__ import annotations

import json
import logging
import os
from pathlib import Path

from ramsey_spaces.infrastructure.config.defaults import DEFAULT_SETTINGS_ENV
from ramsey_spaces.infrastructure.config.schema import AppSettingsData

logger = logging.getLogger(__name__)


class AppSettings:
    """実験設定 settings.json の読み書きを担当する。

    パスは --settings、環境変数 RAMSEY_SPACES_SETTINGS、FILE_PATH の順に決まる。
    """

    FILE_PATH = Path("settings.json")

    @classmethod
    def resolve_path(cls, explicit: str | Path | None = None) -> Path:
        if explicit is not None:
            return Path(explicit)
        from_env = os.environ.get(DEFAULT_SETTINGS_ENV)
        if from_env:
            return Path(from_env)
        return cls.FILE_PATH

    @classmethod
    def save(cls, settings: AppSettingsData, path: str | Path | None = None) -> None:
        target = cls.resolve_path(path)
        try:
            with target.open("w", encoding="utf-8") as f:
                json.dump(settings.to_dict(), f, ensure_ascii=False, indent=4)
        except OSError:
            logger.exception("設定の保存に失敗しました: %s", target)

    @classmethod
    def load(cls, path: str | Path | None = None) -> AppSettingsData:
        """設定を読み込む。ファイルが無い、または壊れている場合は既定値を返す。"""
        source = cls.resolve_path(path)
        if not source.exists():
            logger.debug("設定ファイルがないため既定値を使います: %s", source)
            return AppSettingsData()

        try:
            with source.open(encoding="utf-8") as f:
                raw = json.load(f)
            if not isinstance(raw, dict):
                msg = "settings.json のトップレベルはオブジェクトである必要があります。"
                raise ValueError(msg)  # noqa: TRY004, TRY301
            return AppSettingsData.from_dict(raw)
        except (OSError, TypeError, ValueError):
            logger.exception("設定の読み込みに失敗しました: %s", source)
            return AppSettingsData()

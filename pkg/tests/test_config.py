import json
from pathlib import Path

import pytest

from ramsey_spaces.infrastructure.config.defaults import DEFAULT_SETTINGS_ENV
from ramsey_spaces.infrastructure.config.json_store import AppSettings
from ramsey_spaces.infrastructure.config.schema import (
    AppSettingsData,
    ExperimentSettings,
    SearchSettings,
)


def test_app_settings_save_load(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv(DEFAULT_SETTINGS_ENV, raising=False)
    settings_path = tmp_path / "settings.json"
    original_path = AppSettings.FILE_PATH
    AppSettings.FILE_PATH = settings_path
    try:
        settings = AppSettingsData(
            search=SearchSettings(depth=6, budget=4),
            experiments=ExperimentSettings(seed=11, workers=2),
        )

        AppSettings.save(settings)
        assert settings_path.exists()

        loaded = AppSettings.load()
        assert loaded == settings
        assert loaded.to_dict()["schema_version"] == 1
    finally:
        AppSettings.FILE_PATH = original_path


def test_app_settings_load_not_found(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv(DEFAULT_SETTINGS_ENV, raising=False)
    original_path = AppSettings.FILE_PATH
    AppSettings.FILE_PATH = tmp_path / "not_exist.json"
    try:
        settings = AppSettings.load()
        assert settings == AppSettingsData()
    finally:
        AppSettings.FILE_PATH = original_path


def test_app_settings_prefers_explicit_path_over_environment(
    tmp_path: Path, monkeypatch: pytest.MonkeyPatch
) -> None:
    """--settings の指定は環境変数より優先される。"""
    env_path = tmp_path / "env.json"
    explicit_path = tmp_path / "explicit.json"
    env_path.write_text(json.dumps({"search": {"depth": 3}}), encoding="utf-8")
    explicit_path.write_text(json.dumps({"search": {"depth": 5}}), encoding="utf-8")
    monkeypatch.setenv(DEFAULT_SETTINGS_ENV, str(env_path))

    assert AppSettings.resolve_path() == env_path
    assert AppSettings.load().search.depth == 3
    assert AppSettings.load(explicit_path).search.depth == 5


def test_app_settings_load_falls_back_to_defaults_for_broken_file(tmp_path: Path) -> None:
    """壊れたファイルや不正な値は既定値に置き換わる。"""
    broken = tmp_path / "broken.json"
    broken.write_text("{not json", encoding="utf-8")
    invalid = tmp_path / "invalid.json"
    invalid.write_text(json.dumps({"search": {"depth": 0}}), encoding="utf-8")
    top_level_list = tmp_path / "list.json"
    top_level_list.write_text("[]", encoding="utf-8")

    assert AppSettings.load(broken) == AppSettingsData()
    assert AppSettings.load(invalid) == AppSettingsData()
    assert AppSettings.load(top_level_list) == AppSettingsData()

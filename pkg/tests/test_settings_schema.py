import pytest

from ramsey_spaces.infrastructure.config.schema import (
    AppSettingsData,
    ExperimentSettings,
    OutputSettings,
    SearchSettings,
)


def test_app_settings_data_reads_and_saves_all_sections() -> None:
    """全セクションを持つsettingsを読み込み保存形式へ戻せることを確認する。"""
    raw_settings = {
        "schema_version": 1,
        "search": {
            "depth": 6,
            "budget": 12,
            "k": 3,
            "max_terms": 2,
            "scan_limit": 1000,
            "translate_limit": None,
            "extension_limit": 64,
        },
        "experiments": {
            "seed": 42,
            "workers": 4,
            "miniature": {"threshold": 100, "samples": 10},
            "pigeonhole_colourings": 20,
            "corpus_size": 3,
        },
        "output": {"format": "json", "timing": True},
    }

    settings = AppSettingsData.from_dict(raw_settings)

    assert settings.search.depth == 6
    assert settings.search.max_terms == 2
    assert settings.search.translate_limit is None
    assert settings.experiments.miniature_threshold == 100
    assert settings.experiments.miniature_samples == 10
    assert settings.output.format == "json"
    assert settings.output.timing is True
    assert settings.to_dict() == raw_settings


def test_missing_sections_use_defaults() -> None:
    """セクション未作成時はそのセクションの既定値を使う。"""
    settings = AppSettingsData.from_dict({"search": {"budget": 3}})

    assert settings.search == SearchSettings(budget=3)
    assert settings.experiments == ExperimentSettings()
    assert settings.output == OutputSettings()


def test_default_values() -> None:
    settings = AppSettingsData()

    assert settings.search.depth == 8
    assert settings.search.budget == 10
    assert settings.search.k == 2
    assert settings.search.max_terms is None
    assert settings.search.translate_limit == 4096
    assert settings.search.extension_limit == 256
    assert settings.experiments.seed == 0
    assert settings.experiments.workers == 1
    assert settings.experiments.pigeonhole_colourings == 100
    assert settings.experiments.corpus_size == 8
    assert settings.output.format == "text"
    assert settings.output.timing is False


def test_non_object_section_is_rejected() -> None:
    with pytest.raises(ValueError, match="settings section must be an object: search"):
        AppSettingsData.from_dict({"search": [1, 2]})


def test_unsupported_schema_version_is_rejected() -> None:
    with pytest.raises(ValueError, match="schema_version"):
        AppSettingsData.from_dict({"schema_version": 2})


@pytest.mark.parametrize(
    ("factory", "match"),
    [
        (lambda: SearchSettings(depth=0), "depth は1以上"),
        (lambda: SearchSettings(k=0), "k は1以上"),
        (lambda: SearchSettings(budget=-1), "budget は0以上"),
        (lambda: ExperimentSettings(workers=0), "workers は1以上"),
        (lambda: OutputSettings(format="xml"), "text か json"),  # type: ignore[arg-type]
    ],
)
def test_invalid_values_are_rejected(factory: object, match: str) -> None:
    with pytest.raises(ValueError, match=match):
        factory()  # type: ignore[operator]

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from ramsey_spaces.data_formats.report_document import ReportFormat

DEFAULT_SETTINGS_ENV = "RAMSEY_SPACES_SETTINGS"

DEFAULT_SEARCH_DEPTH = 8
DEFAULT_SEARCH_BUDGET = 10
DEFAULT_SEARCH_K = 2
DEFAULT_MAX_TERMS: int | None = None
DEFAULT_SCAN_LIMIT = 1 << 20
DEFAULT_TRANSLATE_LIMIT = 4096
DEFAULT_EXTENSION_LIMIT = 256

DEFAULT_SEED = 0
DEFAULT_WORKERS = 1
DEFAULT_MINIATURE_THRESHOLD = 4096
DEFAULT_MINIATURE_SAMPLES = 256
DEFAULT_PIGEONHOLE_COLOURINGS = 100
DEFAULT_CORPUS_SIZE = 8

DEFAULT_OUTPUT_FORMAT: ReportFormat = "text"
DEFAULT_OUTPUT_TIMING = False

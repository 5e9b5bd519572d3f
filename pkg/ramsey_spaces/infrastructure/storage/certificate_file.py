from __future__ import annotations

import json
import logging
from pathlib import Path

from ramsey_spaces.data_formats.certificate_document import CertificateDocument

logger = logging.getLogger(__name__)


def save_certificate(document: CertificateDocument, path: str | Path) -> Path:
    """証明書を {"w0", "X", "alphabet", "mode"} の JSON として保存する。"""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with target.open("w", encoding="utf-8", newline="\n") as f:
        json.dump(document.to_dict(), f, ensure_ascii=False, indent=2, sort_keys=True)
        f.write("\n")
    logger.info("証明書を保存しました: %s", target)
    return target


def load_certificate(path: str | Path) -> CertificateDocument:
    source = Path(path)
    try:
        with source.open(encoding="utf-8") as f:
            raw = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        msg = f"証明書ファイルを読めません: {source}: {e}"
        raise ValueError(msg) from e
    return CertificateDocument.from_dict(raw)

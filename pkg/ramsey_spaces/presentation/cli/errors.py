from __future__ import annotations

import argparse
from typing import NoReturn

EXIT_OK = 0
EXIT_EXHAUSTED = 2
EXIT_VIOLATION = 3
EXIT_BAD_INPUT = 4


class CliUsageError(ValueError):
    """コマンドラインの引数が不正。終了コード 4 になる。"""


class CliArgumentParser(argparse.ArgumentParser):
    """argparse の SystemExit(2) を CliUsageError に置き換えたパーサ。"""

    def error(self, message: str) -> NoReturn:
        raise CliUsageError(f"{self.prog}: {message}")

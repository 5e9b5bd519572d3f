from __future__ import annotations

import threading
import time


class SearchCancelled(InterruptedError):  # noqa: N818
    """探索が打ち切られた。reason は "requested" か "time-limit"。"""

    def __init__(self, message: str, reason: str) -> None:
        super().__init__(message)
        self.reason = reason


class CancellationToken:
    """探索ループが定期的に確認する打ち切り要求と制限時間。

    制限時間は time.monotonic で測る。
    """

    def __init__(self) -> None:
        self._event = threading.Event()
        self._deadline: float | None = None

    def cancel(self) -> None:
        self._event.set()

    def set_time_limit(self, seconds: float) -> None:
        """今から seconds 秒後を期限にする。"""
        if seconds <= 0:
            msg = f"制限時間は正の秒数にしてください: {seconds}"
            raise ValueError(msg)
        self._deadline = time.monotonic() + seconds

    def expired(self) -> bool:
        return self._deadline is not None and time.monotonic() >= self._deadline

    def is_cancelled(self) -> bool:
        return self._event.is_set() or self.expired()

    def raise_if_cancelled(self) -> None:
        if self._event.is_set():
            msg = "探索がキャンセルされました。"
            raise SearchCancelled(msg, "requested")
        if self.expired():
            msg = "制限時間を超えたため探索を打ち切りました。"
            raise SearchCancelled(msg, "time-limit")

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt


def sigma(k: int) -> int:
    """k+1 の 2進付値 (ruler sequence) を返す。"""
    if k < 0:
        msg = f"sigma は非負整数にだけ定義されます: {k}"
        raise ValueError(msg)
    value = k + 1
    return (value & -value).bit_length() - 1


def sigma_table(size: int) -> npt.NDArray[np.int64]:
    """sigma(0..size-1) を一括で計算する。"""
    values = np.arange(1, size + 1, dtype=np.int64)
    lowest_bit = values & -values
    return np.bitwise_count(lowest_bit - 1).astype(np.int64)


@dataclass(frozen=True)
class RulerWitness:
    """ruler sequence の性質が破れた箇所。"""

    q: int
    start: int
    end: int


def difference_violations(max_q: int, bound: int) -> list[RulerWitness]:
    """sigma(m)=sigma(n)=q の差が 2^{q+1} の倍数でない組 (m, n) を探す。

    隣接する出現同士の差だけを見れば全ての組が確定する。
    """
    table = sigma_table(bound)
    witnesses: list[RulerWitness] = []
    for q in range(max_q + 1):
        positions = np.flatnonzero(table == q)
        gaps = np.diff(positions)
        for index in np.flatnonzero(gaps % (1 << (q + 1)) != 0):
            witnesses.append(RulerWitness(q, int(positions[index]), int(positions[index + 1])))
    return witnesses


def interval_violations(max_q: int, bound: int) -> list[RulerWitness]:
    """[0, bound) 内の長さ 2^{q+1} の区間で sigma=q の元を含まないものを探す。"""
    table = sigma_table(bound)
    witnesses: list[RulerWitness] = []
    for q in range(max_q + 1):
        width = 1 << (q + 1)
        positions = np.concatenate(([-1], np.flatnonzero(table == q), [bound]))
        free_runs = np.diff(positions) - 1
        for index in np.flatnonzero(free_runs >= width):
            start = int(positions[index]) + 1
            witnesses.append(RulerWitness(q, start, start + width))
    return witnesses

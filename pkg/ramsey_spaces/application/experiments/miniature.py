from __future__ import annotations

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

import numpy as np

from ramsey_spaces.data_formats.eqrel_text import format_eqrel
from ramsey_spaces.domain.eqrel.finite import coarsenings, relations_with_classes

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from ramsey_spaces.application.search.cancellation import CancellationToken
    from ramsey_spaces.domain.eqrel.finite import FiniteEqRel

logger = logging.getLogger(__name__)

MAX_POINTS = 8
MAX_CLASSES = 3
MAX_COLOURS = 2
DEFAULT_COLOURING_THRESHOLD = 4096
DEFAULT_SAMPLES = 256
WITNESS_SCOPE = "X はちょうど k+1 クラスの関係に限って探す。一般の双対ラムゼー命題の判定ではない。"


@dataclass(frozen=True)
class ColouringVerdict:
    """1つの塗り分けについて、k 粗化が単色になる X が見つかったか。"""

    index: int
    colouring: tuple[int, ...]
    witness: FiniteEqRel | None
    colour: int | None

    @property
    def success(self) -> bool:
        return self.witness is not None

    def to_dict(self) -> dict[str, Any]:
        return {
            "index": self.index,
            "colouring": "".join(str(c) for c in self.colouring),
            "witness": None if self.witness is None else format_eqrel(self.witness),
            "colour": self.colour,
        }


@dataclass(frozen=True)
class MiniatureOutcome:
    m: int
    k: int
    r: int
    universe_size: int
    space_size: int
    sampled: bool
    seed: int | None
    verdicts: tuple[ColouringVerdict, ...]

    @property
    def successes(self) -> int:
        return sum(1 for verdict in self.verdicts if verdict.success)

    @property
    def failures(self) -> int:
        return len(self.verdicts) - self.successes

    def to_dict(self) -> dict[str, Any]:
        return {
            "m": self.m,
            "k": self.k,
            "r": self.r,
            "witness_classes": self.k + 1,
            "scope": WITNESS_SCOPE,
            "universe_size": self.universe_size,
            "space_size": self.space_size,
            "sampled": self.sampled,
            "threshold_exceeded": self.sampled,
            "colourings_checked": len(self.verdicts),
            "successes": self.successes,
            "failures": self.failures,
            "verdicts": [verdict.to_dict() for verdict in self.verdicts],
        }


def _check_limits(m: int, k: int, r: int) -> None:
    if not 1 <= k <= MAX_CLASSES:
        msg = f"k は 1..{MAX_CLASSES} にしてください: {k}"
        raise ValueError(msg)
    if not k < m <= MAX_POINTS:
        msg = f"m は {k + 1}..{MAX_POINTS} にしてください: {m}"
        raise ValueError(msg)
    if not 1 <= r <= MAX_COLOURS:
        msg = f"r は 1..{MAX_COLOURS} にしてください: {r}"
        raise ValueError(msg)


def _coarsening_table(
    universe: Sequence[FiniteEqRel], m: int, k: int
) -> list[tuple[FiniteEqRel, tuple[int, ...]]]:
    """k+1 クラスの各 X と、その k クラスの粗化の universe での番号。"""
    index_of = {relation: i for i, relation in enumerate(universe)}
    return [
        (x, tuple(sorted(index_of[a] for a in coarsenings(x) if a.length == k)))
        for x in relations_with_classes(m, k + 1)
    ]


def _colourings(
    universe_size: int, r: int, threshold: int, samples: int, seed: int | None
) -> tuple[Iterable[tuple[int, ...]], int, bool]:
    space_size = r**universe_size
    if space_size <= threshold:
        return itertools.product(range(r), repeat=universe_size), space_size, False
    logger.info(
        "塗り分けの数 %d が閾値 %d を超えたため %d 個を抽出します (seed=%s)。",
        space_size,
        threshold,
        samples,
        seed,
    )
    draws = np.random.default_rng(seed).integers(r, size=(samples, universe_size))
    return (tuple(int(c) for c in row) for row in draws), space_size, True


def miniature_dual_ramsey(
    m: int,
    k: int,
    r: int,
    *,
    threshold: int = DEFAULT_COLOURING_THRESHOLD,
    samples: int = DEFAULT_SAMPLES,
    seed: int | None = 0,
    workers: int = 1,
    token: CancellationToken | None = None,
) -> MiniatureOutcome:
    """{0..m-1} 上の k クラスの関係の r 色の塗り分けごとに、k 粗化が単色になる X を探す。

    X は k+1 クラスの関係から辞書式順で最初に見つかったものを返す。
    塗り分けの総数が threshold を超えたら seed から samples 個を抽出する。
    """
    _check_limits(m, k, r)
    universe = relations_with_classes(m, k)
    table = _coarsening_table(universe, m, k)
    colourings, space_size, sampled = _colourings(len(universe), r, threshold, samples, seed)

    def judge(item: tuple[int, tuple[int, ...]]) -> ColouringVerdict:
        index, colouring = item
        if token is not None:
            token.raise_if_cancelled()
        for x, members in table:
            colours = {colouring[i] for i in members}
            if len(colours) == 1:
                return ColouringVerdict(index, colouring, x, colours.pop())
        return ColouringVerdict(index, colouring, None, None)

    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        verdicts = tuple(executor.map(judge, enumerate(colourings)))

    outcome = MiniatureOutcome(
        m, k, r, len(universe), space_size, sampled, seed if sampled else None, verdicts
    )
    logger.info(
        "miniature m=%d k=%d r=%d: 成功 %d / 失敗 %d",
        m,
        k,
        r,
        outcome.successes,
        outcome.failures,
    )
    return outcome

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Final

from ramsey_spaces.domain.eqrel.finite import FiniteEqRel, leq_fin
from ramsey_spaces.domain.eqrel.stream import EqRelStream, StreamMetadata

if TYPE_CHECKING:
    from collections.abc import Mapping

INFINITE_DEPTH: Final = math.inf


@dataclass(frozen=True)
class JoinSpec:
    """クラス番号 k を、より前のクラス番号 j < k へ併合する指示。

    explicit の指定に加え、tail_from 以降で (k - tail_from) が tail_period の倍数になる
    クラスを全て tail_target へ送る、という結局周期的な指定を持てる。
    """

    explicit: Mapping[int, int] = field(default_factory=dict)
    tail_from: int | None = None
    tail_target: int = 0
    tail_period: int = 1

    def __post_init__(self) -> None:
        for k, j in self.explicit.items():
            if not 0 <= j < k:
                msg = f"クラス {k} はより前のクラスへだけ併合できます (指定: {j})。"
                raise ValueError(msg)
        if self.tail_from is not None:
            if not 0 <= self.tail_target < self.tail_from:
                msg = (
                    f"tail の併合先 {self.tail_target} は開始番号 {self.tail_from}"
                    " より前である必要があります。"
                )
                raise ValueError(msg)
            if self.tail_period < 1:
                msg = "tail_period は1以上にしてください。"
                raise ValueError(msg)

    @classmethod
    def all_from(cls, k: int, target: int = 0) -> JoinSpec:
        """k 以降の全クラスを target へ送る指定を返す。"""
        return cls(tail_from=k, tail_target=target)

    def target(self, k: int) -> int | None:
        """クラス k の直接の併合先を返す。併合しないなら None。"""
        if k in self.explicit:
            return self.explicit[k]
        if (
            self.tail_from is not None
            and k >= self.tail_from
            and (k - self.tail_from) % self.tail_period == 0
        ):
            return self.tail_target
        return None

    def resolve(self, k: int) -> int:
        """併合を辿り、クラス k が最終的に属するクラス番号を返す。"""
        while (j := self.target(k)) is not None:
            k = j
        return k

    def distinguishing_bound(self) -> int:
        """この指定の振る舞いが周期的になる前の最大クラス番号 (+1)。"""
        bound = max(self.explicit, default=0) + 1
        if self.tail_from is not None:
            bound = max(bound, self.tail_from + self.tail_period)
        return bound

    def is_empty(self) -> bool:
        return not self.explicit and self.tail_from is None


class _CoarseningSource:
    def __init__(self, base: EqRelStream, joins: JoinSpec) -> None:
        self._base = base
        self._joins = joins

    def rep_of(self, x: int) -> int:
        return self._base.rep(self._joins.resolve(self._base.rep_index(x)))


def coarsen(relation: EqRelStream, joins: JoinSpec) -> EqRelStream:
    """各クラス p_k を指定に従って p_j のクラスへ併合した関係を返す。"""
    if joins.is_empty():
        return relation
    return EqRelStream(
        _CoarseningSource(relation, joins),
        StreamMetadata("coarsening-of", description=relation.metadata.provenance),
        scan_limit=relation.scan_limit,
    )


@dataclass(frozen=True)
class CoarseningCheck:
    """有界な粗さ判定の結果。偽のときは失敗した近似の番号を持つ。"""

    holds: bool
    failing_level: int | None = None
    probe_depth: int = 0

    def __bool__(self) -> bool:
        return self.holds


def _matching_level(size: int, relation: EqRelStream) -> int | None:
    """dom(r_m)=size となる m を返す。定義域は狭義単調増加なので高々1つ。"""
    m = 0
    while (domain := relation.domain_size(m)) <= size:
        if domain == size:
            return m
        m += 1
    return None


def is_coarsening(
    finer_candidate: EqRelStream, base: EqRelStream, probe_depth: int
) -> CoarseningCheck:
    """全ての n <= probe_depth について r_n(F) <=_fin r_m(E) となる m があるかを調べる。

    有限深さまでの半決定であり、True は「探索した範囲で反例なし」を意味する。
    """
    if probe_depth < 1:
        msg = "probe_depth は1以上にしてください。"
        raise ValueError(msg)

    for n in range(probe_depth + 1):
        a = finer_candidate.approx(n)
        m = _matching_level(a.m, base)
        if m is None or not leq_fin(a, base.approx(m)):
            return CoarseningCheck(holds=False, failing_level=n, probe_depth=probe_depth)
    return CoarseningCheck(holds=True, probe_depth=probe_depth)


def depth(a: FiniteEqRel, relation: EqRelStream) -> int | float:
    """a <=_fin r_n(B) となる最小の n を返す。存在しなければ INFINITE_DEPTH。"""
    if a.m == 0:
        return 0
    n = _matching_level(a.m, relation)
    if n is None or not leq_fin(a, relation.approx(n)):
        return INFINITE_DEPTH
    return n


def in_bracket(
    a: FiniteEqRel,
    base: EqRelStream,
    candidate: EqRelStream,
    probe_depth: int,
) -> bool:
    """candidate ∈ [a, base] を probe_depth まで検査する。"""
    if probe_depth < a.length:
        msg = f"probe_depth ({probe_depth}) は |a|={a.length} 以上にしてください。"
        raise ValueError(msg)
    if candidate.approx(a.length) != a:
        return False
    return bool(is_coarsening(candidate, base, max(probe_depth, 1)))

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from functools import cache
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Hashable, Iterator, Sequence


@dataclass(frozen=True)
class FiniteEqRel:
    """{0..m-1} 上の同値関係を、各元の最小代表元の配列で表した近似。"""

    assign: tuple[int, ...]

    def __post_init__(self) -> None:
        """代表元配列が正準形であることを検証する。"""
        for i, rep in enumerate(self.assign):
            if rep < 0 or rep > i:
                msg = f"assign[{i}]={rep} は0以上{i}以下である必要があります。"
                raise ValueError(msg)
            if self.assign[rep] != rep:
                msg = f"assign[{i}]={rep} は代表元(不動点)ではありません。"
                raise ValueError(msg)

    @classmethod
    def empty(cls) -> FiniteEqRel:
        """長さ0の近似 r_0 を返す。"""
        return cls(())

    @classmethod
    def identity(cls, m: int) -> FiniteEqRel:
        """全ての元が単独のクラスになる近似を返す。"""
        return cls(tuple(range(m)))

    @property
    def m(self) -> int:
        """定義域 {0..m-1} の大きさ。"""
        return len(self.assign)

    @property
    def reps(self) -> tuple[int, ...]:
        """最小代表元 p(a) を昇順で返す。"""
        return tuple(i for i, rep in enumerate(self.assign) if rep == i)

    @property
    def length(self) -> int:
        """クラス数 |a|。"""
        return sum(1 for i, rep in enumerate(self.assign) if rep == i)

    def rep(self, k: int) -> int:
        """k番目の最小代表元 p_k(a) を返す。"""
        reps = self.reps
        if not 0 <= k < len(reps):
            msg = f"代表元の番号 {k} が範囲外です (|a|={len(reps)})。"
            raise IndexError(msg)
        return reps[k]

    def class_index(self, x: int) -> int:
        """x が属するクラスの番号 (代表元の順位) を返す。"""
        return self.reps.index(self.assign[x])

    def classes(self) -> tuple[tuple[int, ...], ...]:
        """代表元の昇順にクラスの元を並べて返す。"""
        members: dict[int, list[int]] = {}
        for i, rep in enumerate(self.assign):
            members.setdefault(rep, []).append(i)
        return tuple(tuple(members[rep]) for rep in sorted(members))

    def restrict(self, k: int) -> FiniteEqRel:
        """最初の k クラスへの制限 r_k(a) を返す。"""
        if k == self.length:
            return self
        return FiniteEqRel(self.assign[: self.rep(k)])

    def prefix(self, size: int) -> FiniteEqRel:
        """{0..size-1} への制限を返す。クラスの境界である必要はない。"""
        if not 0 <= size <= self.m:
            msg = f"prefixの大きさ {size} が定義域 {self.m} を超えています。"
            raise ValueError(msg)
        return FiniteEqRel(self.assign[:size])

    def is_initial_segment_of(self, other: FiniteEqRel) -> bool:
        """self ⊑ other、すなわち self = r_{|self|}(other) かを返す。"""
        if self.length > other.length:
            return False
        return other.restrict(self.length) == self


def canonical_form(raw: Sequence[Hashable] | Mapping[int, Hashable]) -> FiniteEqRel:
    """任意のクラスラベル付けを最小代表元の配列へ正規化する。"""
    if isinstance(raw, Mapping):
        keys = sorted(raw)
        if keys != list(range(len(keys))):
            msg = "ラベル付けは {0..m-1} 上で全域である必要があります。"
            raise ValueError(msg)
        labels: Sequence[Hashable] = [raw[i] for i in keys]
    else:
        labels = list(raw)

    first_seen: dict[Hashable, int] = {}
    return FiniteEqRel(tuple(first_seen.setdefault(label, i) for i, label in enumerate(labels)))


def leq_fin(a: FiniteEqRel, b: FiniteEqRel) -> bool:
    """dom(a)=dom(b) かつ a が b より粗いとき True を返す。"""
    if a.m != b.m:
        return False
    return all(a.assign[i] == a.assign[rep] for i, rep in enumerate(b.assign))


def restricted_growth_strings(
    length: int, max_blocks: int | None = None
) -> Iterator[tuple[int, ...]]:
    """長さ length の制限成長列を辞書式順に列挙する。"""
    limit = length if max_blocks is None else max_blocks

    def extend(prefix: tuple[int, ...], blocks: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == length:
            yield prefix
            return
        for label in range(min(blocks + 1, limit)):
            yield from extend((*prefix, label), max(blocks, label + 1))

    if length == 0:
        yield ()
        return
    yield from extend((0,), 1)


def relations_with_classes(m: int, k: int) -> tuple[FiniteEqRel, ...]:
    """{0..m-1} 上のちょうど k クラスの同値関係を全て返す。"""
    return tuple(
        canonical_form(rgs)
        for rgs in restricted_growth_strings(m, max_blocks=k)
        if (max(rgs) + 1 if rgs else 0) == k
    )


def coarsenings(b: FiniteEqRel) -> Iterator[FiniteEqRel]:
    """leq_fin(a, b) を満たす a を全て列挙する (Bell(|b|) 個)。"""
    reps = b.reps
    for merge in restricted_growth_strings(len(reps)):
        label_of_rep = dict(zip(reps, merge, strict=True))
        yield canonical_form([label_of_rep[rep] for rep in b.assign])


@cache
def bell_number(n: int) -> int:
    """Bell数 B_n をBell三角形で計算する。"""
    row = [1]
    for _ in range(n):
        next_row = [row[-1]]
        for value in row:
            next_row.append(next_row[-1] + value)
        row = next_row
    return row[0]

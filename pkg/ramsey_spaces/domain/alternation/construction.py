from __future__ import annotations

import logging
from typing import TYPE_CHECKING

import numpy as np

from ramsey_spaces.domain.alternation.constraint import RelationSpace, resolve_constraint
from ramsey_spaces.domain.eqrel.finite import FiniteEqRel
from ramsey_spaces.domain.eqrel.order import INFINITE_DEPTH, depth
from ramsey_spaces.domain.eqrel.stream import (
    EqRelStream,
    IncrementalRepSource,
    StreamMetadata,
)

if TYPE_CHECKING:
    from ramsey_spaces.domain.alternation.constraint import ConstraintSeq
    from ramsey_spaces.domain.alternation.partition import Partition

logger = logging.getLogger(__name__)


class ConstructionError(ValueError):
    """貪欲構成で、元を併合できるクラスが1つも無かった。"""

    def __init__(self, witness: int, message: str) -> None:
        super().__init__(message)
        self.witness = witness


class _ClassChoiceSource(IncrementalRepSource):
    """基底関係のクラスを順に見て、新しい代表元にするか既存のクラスへ併合するかを決める。

    基底クラスの代表元がパターンの要求するブロックにあれば新しい代表元候補になる。
    prefix が与えられた範囲では prefix のクラス分けをそのまま使う。
    """

    def __init__(
        self,
        base: EqRelStream,
        space: RelationSpace,
        prefix: FiniteEqRel | None = None,
        rng: np.random.Generator | None = None,
        rep_probability: float = 1.0,
    ) -> None:
        super().__init__()
        self._base = base
        self._space = space
        self._prefix = prefix if prefix is not None else FiniteEqRel.empty()
        self._rng = rng
        self._rep_probability = rep_probability
        self._target_of_base_rep: dict[int, int] = {}

    def _next_rep(self, x: int) -> int:
        base_rep = self._base.rep_of(x)
        if base_rep != x:
            return self._target_of_base_rep[base_rep]
        target = self._choose(x)
        self._target_of_base_rep[x] = target
        return target

    def _choose(self, x: int) -> int:
        if x < self._prefix.m:
            return self._prefix.assign[x]

        partition = self._space.partition
        matches = partition.classify(x) == partition.pattern_block(len(self._reps))
        if matches and (self._rng is None or self._rng.random() < self._rep_probability):
            return x

        legal = [rep for rep in self._reps if self._space.can_join(x, rep)]
        if not legal:
            if matches:
                return x
            msg = f"元 {x} を併合できる既存のクラスがありません ({self._space.spec})。"
            raise ConstructionError(x, msg)
        if self._rng is None:
            return legal[0]
        return legal[int(self._rng.integers(len(legal)))]


def canonical_finest(
    partition: Partition, constraint: ConstraintSeq | None = None
) -> EqRelStream:
    """ω を先頭から走査し、パターンに合う元を代表元にする最も細かい標準的な関係を返す。

    それ以外の元は p_0 のクラスへ、許されなければ最初の許されるクラスへ併合する。
    """
    space = RelationSpace(partition, resolve_constraint(constraint))
    return EqRelStream(
        _ClassChoiceSource(EqRelStream.identity(), space),
        StreamMetadata("pattern-canonical", description=space.spec),
    )


def random_coarsening(
    base: EqRelStream,
    space: RelationSpace,
    seed: int,
    rep_probability: float = 0.5,
) -> EqRelStream:
    """base の粗化のうち space に属するものをシード付きで1つ生成する。"""
    if not 0.0 < rep_probability <= 1.0:
        msg = f"rep_probability は (0, 1] の範囲にしてください: {rep_probability}"
        raise ValueError(msg)
    return EqRelStream(
        _ClassChoiceSource(
            base,
            space,
            rng=np.random.default_rng(seed),
            rep_probability=rep_probability,
        ),
        StreamMetadata(
            "random-alternating",
            description=f"{space.spec} seed={seed} of {base.metadata.provenance}",
        ),
        scan_limit=base.scan_limit,
    )


def random_alternating(
    space: RelationSpace, seed: int, rep_probability: float = 0.5
) -> EqRelStream:
    """space に属するランダムな関係を返す。"""
    return random_coarsening(EqRelStream.identity(), space, seed, rep_probability)


def extend_greedily(a: FiniteEqRel, relation: EqRelStream, space: RelationSpace) -> EqRelStream:
    """r_{|a|}(B) = a かつ B <= relation となる B を貪欲に作る。

    depth(a, relation) が有限であることが前提。
    """
    level = depth(a, relation)
    if level == INFINITE_DEPTH:
        msg = f"a は関係のどの近似とも比較できません (|a|={a.length}, m={a.m})。"
        raise ValueError(msg)
    logger.debug("extend_greedily: |a|=%d depth=%s", a.length, level)
    return extend_prefix(
        a, relation, space, StreamMetadata("greedy-extension", description=f"depth={level}")
    )


def extend_prefix(
    prefix: FiniteEqRel,
    base: EqRelStream,
    space: RelationSpace,
    metadata: StreamMetadata,
) -> EqRelStream:
    """prefix の範囲はそのまま使い、その先を base の粗化としてパターン通りに延長する。"""
    return EqRelStream(
        _ClassChoiceSource(base, space, prefix=prefix),
        metadata,
        scan_limit=base.scan_limit,
    )

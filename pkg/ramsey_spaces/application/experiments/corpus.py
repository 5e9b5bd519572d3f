from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np

from ramsey_spaces.domain.alternation.construction import canonical_finest, random_alternating
from ramsey_spaces.domain.ordinals.rigid import eqrel_to_rigid
from ramsey_spaces.domain.ordinals.transfer import space_for, transfer

if TYPE_CHECKING:
    from collections.abc import Iterator

    from ramsey_spaces.domain.alternation.constraint import RelationSpace
    from ramsey_spaces.domain.eqrel.stream import EqRelStream
    from ramsey_spaces.domain.ordinals.ordinal_eqrel import TransferTarget
    from ramsey_spaces.domain.ordinals.rigid import RigidPrefix

DEFAULT_REP_PROBABILITY = 0.5


def relation_corpus(
    space: RelationSpace,
    count: int,
    seed: int,
    *,
    include_canonical: bool = True,
) -> Iterator[EqRelStream]:
    """space に属する関係を count 個返す。

    先頭は canonical_finest、残りは seed から派生させたシードの random_alternating。
    """
    if count < 0:
        msg = f"count は0以上にしてください: {count}"
        raise ValueError(msg)
    produced = 0
    if include_canonical and count:
        yield canonical_finest(space.partition, space.constraint)
        produced += 1
    seeds = np.random.default_rng(seed).integers(2**31, size=count)
    for child in seeds[produced:]:
        yield random_alternating(space, int(child), DEFAULT_REP_PROBABILITY)


def rigid_corpus(
    target: TransferTarget, count: int, seed: int, size: int, depth: int
) -> Iterator[RigidPrefix]:
    """target 上の剛な全射を、ω 側の関係を写して size 個の元の範囲で count 個返す。"""
    partition = target.order_partition
    space = space_for(partition, target)
    for relation in relation_corpus(space, count, seed):
        image = transfer(relation, partition, target, depth)
        yield eqrel_to_rigid(image, size, depth)


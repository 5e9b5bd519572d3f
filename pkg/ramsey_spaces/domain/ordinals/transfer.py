from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Literal

from ramsey_spaces.domain.alternation.constraint import (
    ConstraintSeq,
    GeqConstraint,
    RelationSpace,
)
from ramsey_spaces.domain.eqrel.order import JoinSpec
from ramsey_spaces.domain.ordinals.ordinal_eqrel import (
    OmegaTimesBeta,
    OrdinalEqRel,
    phi,
    pullback_stream,
)

if TYPE_CHECKING:
    from ramsey_spaces.domain.alternation.partition import Partition
    from ramsey_spaces.domain.eqrel.stream import EqRelStream
    from ramsey_spaces.domain.ordinals.bijection import OmegaBijection
    from ramsey_spaces.domain.ordinals.ordinal_eqrel import OrdinalElem, TransferTarget

logger = logging.getLogger(__name__)

DEFAULT_TRANSFER_DEPTH = 12

OrdinalCondition = Literal["a", "b"]


class TransferError(ValueError):
    """φ で写した関係が順序数側の空間に入らない。"""


@dataclass(frozen=True)
class FGeqConstraint(ConstraintSeq):
    """I_n = {m : f(m) >= f(n)}。"""

    bijection: OmegaBijection

    @property
    def spec(self) -> str:
        return f"f-geq:{self.bijection.spec}"

    def contains(self, n: int, m: int) -> bool:
        return not self.bijection(m) < self.bijection(n)


def build_I(bijection: OmegaBijection) -> FGeqConstraint:  # noqa: N802
    return FGeqConstraint(bijection)


def space_for(partition: Partition, target: TransferTarget) -> RelationSpace:
    """target へ写せる関係の空間 (ω・l なら条件 (c)、α なら (c)_I) を返す。"""
    if isinstance(target, OmegaTimesBeta):
        return RelationSpace(partition, build_I(target.bijection))
    return RelationSpace(partition, GeqConstraint())


@dataclass(frozen=True)
class OrdinalViolation:
    """k 番目の代表元で条件 (a) または (b) が破れている。"""

    k: int
    condition: OrdinalCondition
    standard_rep: OrdinalElem
    order_rep: OrdinalElem

    def describe(self) -> str:
        if self.condition == "b":
            return (
                f"(b) k={self.k}: 標準順序の最小元 {self.standard_rep} と"
                f" ≼ の最小元 {self.order_rep} が異なります。"
            )
        return f"(a) k={self.k}: 代表元 {self.standard_rep} が要求されたコピーにありません。"

    def to_dict(self) -> dict[str, object]:
        return {
            "k": self.k,
            "condition": self.condition,
            "standard_rep": str(self.standard_rep),
            "order_rep": str(self.order_rep),
        }


def validate_ordinal_space(relation: OrdinalEqRel, depth: int) -> OrdinalViolation | None:
    """k < depth について条件 (b) と (a) を調べる。

    標準順序の最小元は q_{2・depth} までの ≼ 窓の中だけで求めるため、半決定である。
    """
    if depth < 1:
        msg = f"depth は1以上にしてください: {depth}"
        raise ValueError(msg)
    order_reps = relation.order_reps(depth)
    standard = relation.standard_reps(relation.window_for(2 * depth))
    target = relation.target
    for k in range(depth):
        if standard[k] != order_reps[k]:
            return OrdinalViolation(k, "b", standard[k], order_reps[k])
        if standard[k].copy != target.pattern_copy(k):
            return OrdinalViolation(k, "a", standard[k], order_reps[k])
    return None


def transfer(
    relation: EqRelStream,
    partition: Partition,
    target: TransferTarget,
    depth: int = DEFAULT_TRANSFER_DEPTH,
) -> OrdinalEqRel:
    """Φ(E) = (φ''E_n) を作り、順序数側の空間に入ることを depth まで確かめる。"""
    image = OrdinalEqRel(relation, partition, target, scan_limit=relation.scan_limit)
    violation = validate_ordinal_space(image, depth)
    if violation is not None:
        msg = f"{target.spec} へ写せません: {violation.describe()}"
        raise TransferError(msg)
    logger.debug("transfer: %s -> %s (depth=%d)", partition.spec, target.spec, depth)
    return image


def transfer_inverse(relation: OrdinalEqRel) -> EqRelStream:
    """Φ⁻¹: クラスキーを φ で引き戻した ω 上の関係を返す。"""
    return pullback_stream(
        relation.class_key, relation.partition, relation.target, "transfer-inverse"
    )


def representatives_preserved(relation: EqRelStream, image: OrdinalEqRel, depth: int) -> bool:
    """φ(p_k(E)) (k < depth) が窓の中の p(Φ(E)) と ≼ の順に一致するか。"""
    reps = sorted(
        (phi(relation.rep(k), image.partition, image.target) for k in range(depth)),
        key=image.target.order_index,
    )
    size = image.target.order_index(reps[-1]) + 1 if reps else 0
    return list(image.standard_reps(size)) == reps


def is_ordinal_coarsening(coarser: OrdinalEqRel, finer: OrdinalEqRel, size: int) -> bool:
    """≼ で最初の size 個の元で、finer の各クラスが coarser の1クラスに含まれるか。"""
    image_of: dict[int, int] = {}
    for elem in finer.window(size):
        key = finer.class_key(elem)
        coarse_key = coarser.class_key(elem)
        if image_of.setdefault(key, coarse_key) != coarse_key:
            return False
    return True


def coarsen_ordinal(relation: OrdinalEqRel, joins: JoinSpec) -> OrdinalEqRel:
    """≼ で k 番目に現れるクラスを joins に従って併合する。"""
    return OrdinalEqRel.from_key(
        lambda elem: joins.resolve(relation.order_rank(elem)),
        relation.partition,
        relation.target,
        description=f"coarsen of {relation.target.spec}",
    )


def project_k(relation: OrdinalEqRel, k: int) -> OrdinalEqRel:
    """p_n (n >= k) を代表元に持つクラスを最小元のクラスへまとめ、k クラスにする。"""
    if k < 1:
        msg = f"k は1以上にしてください: {k}"
        raise ValueError(msg)
    return coarsen_ordinal(relation, JoinSpec.all_from(k, 0))

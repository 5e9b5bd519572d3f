from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import TYPE_CHECKING

from ramsey_spaces.domain.ordinals.ordinal_eqrel import OrdinalElem, OrdinalEqRel
from ramsey_spaces.domain.ordinals.transfer import TransferError

if TYPE_CHECKING:
    from collections.abc import Hashable, Sequence

    from ramsey_spaces.domain.alternation.partition import Partition
    from ramsey_spaces.domain.ordinals.cnf import Cnf
    from ramsey_spaces.domain.ordinals.ordinal_eqrel import TransferTarget


def _canonical_images(
    elems: Sequence[OrdinalElem], keys: Sequence[Hashable]
) -> tuple[OrdinalElem, ...]:
    """≼ の順に並んだ元とそのクラスから、ファイバーの最小元の順を保つ像を決める。

    コピー c で j 番目に現れたファイバーは (j, c) へ写る。
    """
    image_of: dict[Hashable, OrdinalElem] = {}
    fibers_in_copy: Counter[Cnf] = Counter()
    images: list[OrdinalElem] = []
    for elem, key in zip(elems, keys, strict=True):
        if key not in image_of:
            image_of[key] = OrdinalElem(fibers_in_copy[elem.copy], elem.copy)
            fibers_in_copy[elem.copy] += 1
        images.append(image_of[key])
    return tuple(images)


@dataclass(frozen=True)
class RigidPrefix:
    """剛な全射 f : α → α の、≼ で最初の len(images) 個の元での値。

    images[i] は ≼ で i 番目の元の像。その先は各元が単独のファイバーになるとみなす。
    """

    target: TransferTarget
    images: tuple[OrdinalElem, ...]

    def __post_init__(self) -> None:
        elems = self.domain()
        if _canonical_images(elems, self.images) != self.images:
            msg = "像がファイバーの最小元の順序を保っていません (剛な全射ではありません)。"
            raise TransferError(msg)

    def domain(self) -> tuple[OrdinalElem, ...]:
        return tuple(self.target.element_at(i) for i in range(len(self.images)))

    def image(self, elem: OrdinalElem) -> OrdinalElem:
        index = self.target.order_index(elem)
        if index >= len(self.images):
            msg = f"{elem} は保持している範囲 ({len(self.images)} 個) の外です。"
            raise IndexError(msg)
        return self.images[index]

    @classmethod
    def identity(cls, target: TransferTarget, size: int) -> RigidPrefix:
        domain = tuple(target.element_at(i) for i in range(size))
        return cls(target, _canonical_images(domain, domain))


def rigid_to_eqrel(rigid: RigidPrefix, partition: Partition | None = None) -> OrdinalEqRel:
    """ファイバーをクラスとする関係を返す。"""
    target = rigid.target
    size = len(rigid.images)

    def key(elem: OrdinalElem) -> Hashable:
        index = target.order_index(elem)
        if index < size:
            return ("fiber", rigid.images[index])
        return ("tail", elem)

    return OrdinalEqRel.from_key(
        key,
        partition or target.order_partition,
        target,
        description=f"rigid prefix of {size}",
    )


def eqrel_to_rigid(relation: OrdinalEqRel, size: int, depth: int) -> RigidPrefix:
    """クラスをファイバーとする剛な全射を ≼ で最初の size 個の元の上で返す。

    p(E) が各コピーと無限に交わることは、q_0..q_{depth-1} が条件 (a) の要求する
    全てのコピーに現れるかで近似的に確かめる。
    """
    target = relation.target
    seen = {rep.copy for rep in relation.order_reps(depth)}
    missing = [
        target.pattern_copy(k) for k in range(depth) if target.pattern_copy(k) not in seen
    ]
    if missing:
        msg = f"代表元が現れないコピーがあります: {', '.join(str(c) for c in missing)}"
        raise TransferError(msg)
    elems = relation.window(size)
    return RigidPrefix(target, _canonical_images(elems, [relation.class_key(e) for e in elems]))

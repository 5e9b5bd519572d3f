from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from ramsey_spaces.domain.coding.codec import check_letter
from ramsey_spaces.domain.coding.context import CodingError
from ramsey_spaces.domain.words.word import VARIABLE, Word, concat

if TYPE_CHECKING:
    from collections.abc import Sequence

    from ramsey_spaces.domain.coding.context import CodingContext
    from ramsey_spaces.domain.words.word import Symbol


class PlacementInvariantError(RuntimeError):
    """変数を置ける位置 N < t_i が見つからなかった (σ の性質から起こり得ない)。"""


@dataclass(frozen=True)
class ExpandedCertificate:
    """{0..n} ∪ {v} 上の u0 と変数語 y_0, y_1, ...。"""

    u0: Word
    ys: tuple[Word, ...]

    @property
    def reach(self) -> int:
        """y = u0⌢y_0⌢...⌢y_{k-1} の長さ。"""
        return len(self.u0) + sum(len(y) for y in self.ys)

    def block_start(self, index: int) -> int:
        return len(self.u0) + sum(len(y) for y in self.ys[:index])

    def y(self) -> Word:
        return concat(self.u0, *self.ys)


def variable_offset(ctx: CodingContext, index: int, start: int) -> int:
    """y 上の位置 start から始まる幅 t_index のブロックで v を置く最小の位置 N を返す。

    N は p_{n+1+start+N}(E) のブロックが p_{n+1+index}(F) に要求されるブロックと
    一致する最小の位置。有限分割では index mod l になる。
    """
    width = ctx.variable_arity(index)
    partition = ctx.partition
    wanted = partition.pattern_block(ctx.n + 1 + index)
    for offset in range(width):
        if partition.pattern_block(ctx.n + 1 + start + offset) == wanted:
            return offset
    msg = f"x_{index} の変数を置ける位置が [{start}, {start + width}) にありません。"
    raise PlacementInvariantError(msg)


def _flatten(ctx: CodingContext, symbol: Symbol) -> tuple[int, ...]:
    return check_letter(ctx, symbol)


def expand_certificate(
    ctx: CodingContext, w0: Word, xs: Sequence[Word]
) -> ExpandedCertificate:
    """(w0, X) の各文字を座標列に、各 v を 0...0v0...0 のブロックに展開する。"""
    if w0.is_variable():
        msg = "w0 は変数を含まない語である必要があります。"
        raise CodingError(msg)
    for i, x in enumerate(xs):
        if not x.is_left_variable():
            msg = f"x_{i} は左変数語である必要があります。"
            raise CodingError(msg)

    u0 = Word(tuple(coordinate for symbol in w0 for coordinate in _flatten(ctx, symbol)))
    position = len(u0)
    ys: list[Word] = []
    for i, x in enumerate(xs):
        block: list[Symbol] = []
        for symbol in x:
            if symbol is VARIABLE:
                width = ctx.variable_arity(i)
                offset = variable_offset(ctx, i, position + len(block))
                block.extend([0] * offset)
                block.append(VARIABLE)
                block.extend([0] * (width - offset - 1))
            else:
                block.extend(_flatten(ctx, symbol))
        ys.append(Word(tuple(block)))
        position += len(block)
    return ExpandedCertificate(u0, tuple(ys))

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

from ramsey_spaces.domain.alternation.construction import extend_prefix
from ramsey_spaces.domain.coding.codec import decode_word, legal_coordinates
from ramsey_spaces.domain.coding.certificate import variable_offset
from ramsey_spaces.domain.coding.context import CodingError
from ramsey_spaces.domain.eqrel.finite import canonical_form
from ramsey_spaces.domain.eqrel.stream import StreamMetadata
from ramsey_spaces.domain.words.word import VARIABLE, concat

if TYPE_CHECKING:
    from collections.abc import Iterator, Sequence

    from ramsey_spaces.domain.coding.certificate import ExpandedCertificate
    from ramsey_spaces.domain.coding.context import CodingContext
    from ramsey_spaces.domain.eqrel.finite import FiniteEqRel
    from ramsey_spaces.domain.eqrel.stream import EqRelStream
    from ramsey_spaces.domain.words.word import Symbol, Word

logger = logging.getLogger(__name__)


def _check_digits(ctx: CodingContext, word: Word, name: str) -> None:
    for symbol in word:
        if symbol is VARIABLE:
            continue
        if not isinstance(symbol, int) or not 0 <= symbol <= ctx.n:
            msg = f"{name} の文字 {symbol!r} は 0..{ctx.n} の整数である必要があります。"
            raise CodingError(msg)


def _class_labels(ctx: CodingContext, y: Sequence[Symbol], block_of: Sequence[int]) -> list[int]:
    """y の位置 i ごとに p_{n+1+i}(E) の併合先となる F の代表元を返す。"""
    n = ctx.n
    block_rep: dict[int, int] = {}
    labels: list[int] = []
    for position, symbol in enumerate(y):
        if isinstance(symbol, int):
            labels.append(ctx.rep(symbol))
        else:
            block = block_of[position]
            labels.append(block_rep.setdefault(block, ctx.rep(n + 1 + position)))
    return labels


def build_F(  # noqa: N802
    ctx: CodingContext,
    u0: Word,
    ys: Sequence[Word],
    *,
    constrained: bool | None = None,
) -> EqRelStream:
    """y = u0⌢y_0⌢y_1⌢... を読んで E の粗化 F を作る。

    位置 i の文字 k は p_{n+1+i}(E) を p_k(E) のクラスへ併合し、
    同じ y_j の変数の位置はまとめて1つの新しいクラスになる。
    y の先はパターン通りの貪欲な延長で補う。
    """
    if not ys:
        msg = "変数語が1つもありません。F を定めるには y_0 が必要です。"
        raise CodingError(msg)
    for j, y in enumerate(ys):
        if not y.is_variable():
            msg = f"y_{j} は変数を含む必要があります。"
            raise CodingError(msg)
        _check_digits(ctx, y, f"y_{j}")
    if u0.is_variable():
        msg = "u0 は変数を含まない語である必要があります。"
        raise CodingError(msg)
    _check_digits(ctx, u0, "u0")

    use_tilde = ctx.constrained if constrained is None else constrained
    symbols: list[Symbol] = list(concat(u0, *ys))
    block_of = [-1] * len(u0)
    for j, y in enumerate(ys):
        block_of.extend([j] * len(y))
    if use_tilde:
        for position, symbol in enumerate(symbols):
            if isinstance(symbol, int):
                symbols[position] = legal_coordinates(ctx, [symbol], start=position)[0]

    n = ctx.n
    labels = [ctx.rep(k) for k in range(n + 1)] + _class_labels(ctx, symbols, block_of)
    reach = len(symbols)
    size = ctx.rep(n + 1 + reach)
    prefix = canonical_form([labels[ctx.relation.rep_index(x)] for x in range(size)])
    logger.debug("build_F: n=%d reach=%d |F prefix|=%d", n, reach, prefix.length)
    return extend_prefix(
        prefix,
        ctx.relation,
        ctx.space,
        StreamMetadata(
            "word-defined",
            description=f"n={n} ys={len(ys)} tilde={use_tilde}",
            reach=n + 1 + reach,
        ),
    )


@dataclass(frozen=True)
class ExtensionWitness:
    """F 上の端拡大 b と、それを与える平行移動の語 w。"""

    targets: tuple[int, ...]
    extension: FiniteEqRel
    word: Word
    decoded: FiniteEqRel

    @property
    def consistent(self) -> bool:
        """b(w) が F 側で作った b と一致するか。"""
        return self.extension == self.decoded


def _extension_on_f(relation_f: EqRelStream, n: int, targets: Sequence[int]) -> FiniteEqRel:
    size = relation_f.rep(n + 1 + len(targets))
    labels: list[int] = []
    for x in range(size):
        c = relation_f.rep_index(x)
        labels.append(c if c <= n else targets[c - n - 1])
    return canonical_form(labels)


def _witness_word(
    ctx: CodingContext,
    w0: Word,
    xs: Sequence[Word],
    expanded: ExpandedCertificate,
    targets: Sequence[int],
) -> Word:
    pieces = [w0]
    for t, target in enumerate(targets):
        width = ctx.variable_arity(t)
        # x_t の文字は全て幅 width (t_t または l) なので各 v は block_start(t) から width の
        # 倍数だけずれ、要求されるブロックも width を周期に繰り返すため offset は共通。
        offset = variable_offset(ctx, t, expanded.block_start(t))
        letter = tuple(target if j == offset else 0 for j in range(width))
        pieces.append(xs[t].substitute(letter))
    return concat(*pieces)


def end_extensions_within_reach(
    ctx: CodingContext,
    relation_f: EqRelStream,
    w0: Word,
    xs: Sequence[Word],
    expanded: ExpandedCertificate,
    *,
    limit: int | None = None,
) -> Iterator[ExtensionWitness]:
    """y の範囲に収まる r_{n+1}[a, F] の端拡大を列挙し、対応する語と組にする。

    併合するクラスの数 T は ctx.unit の倍数で len(xs) 以下のものを取る。
    制約付きの空間では併合が許される組だけを返す。
    """
    n = ctx.n
    produced = 0
    for count in range(0, len(xs) + 1, ctx.unit):
        choices = [
            [
                g
                for g in range(n + 1)
                if not ctx.constrained
                or ctx.space.can_join(relation_f.rep(n + 1 + t), relation_f.rep(g))
            ]
            for t in range(count)
        ]
        for targets in itertools.product(*choices):
            if limit is not None and produced >= limit:
                return
            word = _witness_word(ctx, w0, xs, expanded, targets)
            yield ExtensionWitness(
                tuple(targets),
                _extension_on_f(relation_f, n, targets),
                word,
                decode_word(ctx, word),
            )
            produced += 1

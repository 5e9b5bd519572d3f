from __future__ import annotations

from typing import TYPE_CHECKING

from ramsey_spaces.domain.coding.context import CodingError, GradedCodingAlphabet
from ramsey_spaces.domain.eqrel.finite import FiniteEqRel, canonical_form, leq_fin
from ramsey_spaces.domain.words.word import VARIABLE, Word

if TYPE_CHECKING:
    from collections.abc import Sequence

    from ramsey_spaces.domain.coding.context import CodingContext
    from ramsey_spaces.domain.words.word import Letter, Symbol


def check_letter(ctx: CodingContext, letter: Symbol) -> tuple[int, ...]:
    """letter が文脈のアルファベットの文字であることを確かめて返す。"""
    if not isinstance(letter, tuple):
        msg = f"符号化の文字は整数の組である必要があります: {letter!r}"
        raise CodingError(msg)
    if ctx.is_finite and len(letter) != ctx.l:
        msg = f"文字 {letter} の長さは l={ctx.l} である必要があります。"
        raise CodingError(msg)
    if not ctx.alphabet.contains(letter):
        msg = f"文字 {letter} はアルファベット (n+1={ctx.n + 1}) に含まれません。"
        raise CodingError(msg)
    return letter


def flatten_letter(letter: Letter, ctx: CodingContext) -> Word:
    """(n+1)^{t_j} の文字を L_0 上の長さ m_j の語 z_l に分解する。"""
    alphabet = ctx.alphabet
    if not isinstance(alphabet, GradedCodingAlphabet):
        msg = "flatten_letter は無限分割の文脈でだけ使えます。"
        raise CodingError(msg)
    coordinates = check_letter(ctx, letter)
    width = ctx.t(0)
    if len(coordinates) % width:
        msg = f"文字の長さ {len(coordinates)} は t_0={width} の倍数ではありません。"
        raise CodingError(msg)
    return Word(
        tuple(coordinates[j : j + width] for j in range(0, len(coordinates), width))
    )


def flat_coordinates(ctx: CodingContext, word: Word) -> list[int]:
    """変数を含まない語を、代表元ごとの併合先の列へ展開する。"""
    coordinates: list[int] = []
    for symbol in word:
        if symbol is VARIABLE:
            msg = "変数を含む語は端拡大に対応しません。"
            raise CodingError(msg)
        coordinates.extend(check_letter(ctx, symbol))
    return coordinates


def legal_coordinates(ctx: CodingContext, coordinates: Sequence[int], start: int = 0) -> list[int]:
    """併合できない座標を 0 (p_0 のクラス) へ置き換える。"""
    base = ctx.n + 1 + start
    return [
        target if ctx.can_join_index(base + position, target) else 0
        for position, target in enumerate(coordinates)
    ]


def extension_from_targets(ctx: CodingContext, targets: Sequence[int]) -> FiniteEqRel:
    """p_{n+1+i}(E) を p_{targets[i]}(E) へ併合した端拡大を p_m(E) 上に作る。"""
    n = ctx.n
    m = n + 1 + len(targets)
    labels: list[int] = []
    for x in range(ctx.rep(m)):
        c = ctx.relation.rep_index(x)
        labels.append(c if c <= n else targets[c - n - 1])
    return canonical_form(labels)


def decode_word(ctx: CodingContext, word: Word) -> FiniteEqRel:
    """語 w が表す端拡大 b(w) ∈ r_{n+1}[a, E] を返す。制約付きなら w̃ を使う。"""
    coordinates = flat_coordinates(ctx, word)
    if len(coordinates) % ctx.unit:
        msg = f"語の座標数 {len(coordinates)} が {ctx.unit} の倍数ではありません。"
        raise CodingError(msg)
    ctx.check_block_sequence(len(coordinates))
    if ctx.constrained:
        coordinates = legal_coordinates(ctx, coordinates)
    return extension_from_targets(ctx, coordinates)


def _extension_level(ctx: CodingContext, b: FiniteEqRel) -> int:
    m = ctx.n + 1
    while (size := ctx.rep(m)) < b.m:
        m += 1
    if size != b.m:
        msg = f"dom(b)={b.m} は E のどの p_m とも一致しません。"
        raise CodingError(msg)
    return m


def encode_extension(ctx: CodingContext, b: FiniteEqRel) -> Word:
    """端拡大 b ∈ r_{n+1}[a, E] を L_0 上の語 w^b に符号化する。"""
    n = ctx.n
    if b.length != n + 1 or b.restrict(n) != ctx.a:
        msg = f"b は a (|a|={n}) を1クラスだけ延長した端拡大ではありません。"
        raise CodingError(msg)
    if b.rep(n) != ctx.rep(n):
        msg = f"新しいクラスの代表元 {b.rep(n)} が p_n(E)={ctx.rep(n)} と異なります。"
        raise CodingError(msg)

    m = _extension_level(ctx, b)
    if not leq_fin(b, ctx.relation.approx(m)):
        msg = f"b は r_{m}(E) より粗くありません。"
        raise CodingError(msg)
    span = m - n - 1
    if span % ctx.unit:
        msg = f"(m-n-1)={span} が {ctx.unit} で割り切れず、λ が整数になりません。"
        raise CodingError(msg)

    reps = b.reps
    coordinates = [reps.index(b.assign[ctx.rep(j)]) for j in range(n + 1, m)]
    width = ctx.unit
    return Word(
        tuple(tuple(coordinates[i : i + width]) for i in range(0, len(coordinates), width))
    )


def tilde_reduce(ctx: CodingContext, word: Word) -> Word:
    """併合できない座標を 0 に置き換えた w̃ を返す。変数の位置はそのまま残す。"""
    position = 0
    reduced: list[Symbol] = []
    for symbol in word:
        if symbol is VARIABLE:
            if not ctx.is_finite:
                msg = "無限分割では変数の幅が語だけから決まらないため、変数を含む語は扱えません。"
                raise CodingError(msg)
            reduced.append(VARIABLE)
            position += ctx.l
            continue
        coordinates = check_letter(ctx, symbol)
        reduced.append(tuple(legal_coordinates(ctx, coordinates, start=position)))
        position += len(coordinates)
    return Word(tuple(reduced))

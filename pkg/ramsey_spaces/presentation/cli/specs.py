"""CLIの指定文字列 (--partition, --constraint, --bijection, --relation など) の解釈。"""

from __future__ import annotations

import json
from pathlib import Path
from typing import TYPE_CHECKING

from ramsey_spaces.application.experiments.colouring import (
    ClopenColouring,
    ClopenPredicate,
    EverythingPredicate,
    ExtensionPredicate,
    FirstJoinPredicate,
    LambdaParityPredicate,
    constant_colouring,
    first_letter_colouring,
    length_mod_colouring,
    letter_count_colouring,
)
from ramsey_spaces.data_formats.cnf_text import parse_cnf
from ramsey_spaces.data_formats.eqrel_text import format_eqrel, parse_eqrel
from ramsey_spaces.data_formats.word_text import parse_letter
from ramsey_spaces.domain.alternation.constraint import (
    AllBlocksConstraint,
    ConstraintSeq,
    GeqConstraint,
)
from ramsey_spaces.domain.alternation.construction import (
    canonical_finest,
    extend_prefix,
    random_alternating,
)
from ramsey_spaces.domain.alternation.partition import (
    DyadicPartition,
    Partition,
    PeriodicPartition,
)
from ramsey_spaces.domain.eqrel.stream import EqRelStream, StreamMetadata
from ramsey_spaces.domain.ordinals.bijection import (
    IdentityBijection,
    OmegaBijection,
    SwapBijection,
    TableBijection,
    WeightOrderBijection,
    default_bijection,
)
from ramsey_spaces.domain.ordinals.cnf import OMEGA, Cnf
from ramsey_spaces.domain.ordinals.ordinal_eqrel import (
    OmegaTimesBeta,
    OmegaTimesL,
    TransferTarget,
)
from ramsey_spaces.domain.ordinals.transfer import build_I
from ramsey_spaces.domain.words.alphabet import Alphabet, FiniteAlphabet
from ramsey_spaces.utils import parse_numbers, split_spec

if TYPE_CHECKING:
    from ramsey_spaces.domain.alternation.constraint import RelationSpace
    from ramsey_spaces.domain.coding.context import CodingContext
    from ramsey_spaces.domain.words.semigroup import Colouring


def _int_arg(kind: str, value: str) -> int:
    try:
        return int(value)
    except ValueError as e:
        msg = f"{kind} の引数は整数である必要があります: {value!r}"
        raise ValueError(msg) from e


def _expect_args(kind: str, args: list[str], count: int) -> None:
    if len(args) != count:
        msg = f"{kind} には {count} 個の引数が必要です (指定: {len(args)} 個)。"
        raise ValueError(msg)


def parse_partition(text: str) -> Partition:
    """mod:l / periodic:b0,b1,... / dyadic。"""
    kind, args = split_spec(text)
    if kind == "mod":
        _expect_args(kind, args, 1)
        return PeriodicPartition.mod(_int_arg(kind, args[0]))
    if kind == "periodic":
        _expect_args(kind, args, 1)
        return PeriodicPartition(tuple(parse_numbers(args[0], int)))
    if kind == "dyadic":
        _expect_args(kind, args, 0)
        return DyadicPartition()
    msg = f"未知の分割です: {text!r} (mod:l, periodic:..., dyadic)"
    raise ValueError(msg)


def _table_from_file(path: Path, beta: Cnf) -> TableBijection:
    """JSON の配列 (整数または CNF 文字列) で f(0), f(1), ... を与える。"""
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        msg = f"全単射の表を読めません: {path}: {e}"
        raise ValueError(msg) from e
    if not isinstance(raw, list):
        msg = f"全単射の表は配列である必要があります: {path}"
        raise ValueError(msg)  # noqa: TRY004
    table = [value if isinstance(value, int) else parse_cnf(str(value)) for value in raw]
    return TableBijection(table, beta, source=str(path))


def parse_bijection(text: str, beta: Cnf = OMEGA) -> OmegaBijection:
    """id / weight / swap:i:j / file:path。"""
    kind, _, rest = text.strip().partition(":")
    kind = kind.lower()
    if kind == "id":
        if beta != OMEGA:
            msg = f"id は β = ω のときだけ使えます (β={beta})。"
            raise ValueError(msg)
        return IdentityBijection()
    if kind == "weight":
        return WeightOrderBijection(beta)
    if kind == "swap":
        args = rest.split(":")
        _expect_args(kind, args, 2)
        return SwapBijection(
            default_bijection(beta), _int_arg(kind, args[0]), _int_arg(kind, args[1])
        )
    if kind == "file" and rest:
        return _table_from_file(Path(rest), beta)
    msg = f"未知の全単射です: {text!r} (id, weight, swap:i:j, file:path)"
    raise ValueError(msg)


def parse_constraint(text: str, beta: Cnf = OMEGA) -> ConstraintSeq:
    """geq / all / f-geq:<全単射>。"""
    kind, _, rest = text.strip().partition(":")
    kind = kind.lower()
    if kind == "geq" and not rest:
        return GeqConstraint()
    if kind == "all" and not rest:
        return AllBlocksConstraint()
    if kind == "f-geq":
        return build_I(parse_bijection(rest or "weight", beta))
    msg = f"未知の制約です: {text!r} (geq, all, f-geq:<id>)"
    raise ValueError(msg)


def target_for(partition: Partition, bijection: OmegaBijection) -> TransferTarget:
    """有限分割なら ω・l、dyadic なら α = ω・β を返す。"""
    blocks = partition.num_blocks
    if blocks is None:
        return OmegaTimesBeta(bijection)
    return OmegaTimesL(blocks)


def parse_relation(text: str, space: RelationSpace) -> EqRelStream:
    """canonical / identity / random:seed / 代表元配列 (その先は貪欲に延長)。"""
    kind, args = split_spec(text)
    if kind == "canonical":
        return canonical_finest(space.partition, space.constraint)
    if kind == "identity":
        return EqRelStream.identity()
    if kind == "random":
        _expect_args(kind, args, 1)
        return random_alternating(space, _int_arg(kind, args[0]))
    prefix = parse_eqrel(text)
    return extend_prefix(
        prefix,
        EqRelStream.identity(),
        space,
        StreamMetadata("prefix-extension", description=format_eqrel(prefix)),
    )


def parse_predicate(text: str) -> ExtensionPredicate:
    """all / first-join:t / lambda-parity / clopen:d:r:seed。"""
    kind, args = split_spec(text)
    if kind == "all":
        return EverythingPredicate()
    if kind == "first-join":
        _expect_args(kind, args, 1)
        return FirstJoinPredicate(_int_arg(kind, args[0]))
    if kind == "lambda-parity":
        return LambdaParityPredicate()
    if kind == "clopen":
        _expect_args(kind, args, 3)
        depth, colours, seed = (_int_arg(kind, arg) for arg in args)
        return ClopenPredicate(ClopenColouring(depth, colours, seed))
    msg = f"未知の判定です: {text!r} (all, first-join:t, lambda-parity, clopen:d:r:seed)"
    raise ValueError(msg)


def parse_alphabet(text: str, ctx: CodingContext | None = None) -> Alphabet:
    """digits:k / tuples:b:a / coding (--partition と --relation から作る)。"""
    kind, args = split_spec(text)
    if kind == "digits":
        _expect_args(kind, args, 1)
        return FiniteAlphabet.digits(_int_arg(kind, args[0]))
    if kind == "tuples":
        _expect_args(kind, args, 2)
        return FiniteAlphabet.tuples(_int_arg(kind, args[0]), _int_arg(kind, args[1]))
    if kind == "coding" and ctx is not None:
        return ctx.alphabet
    msg = f"未知のアルファベットです: {text!r} (digits:k, tuples:b:a, coding)"
    raise ValueError(msg)


def parse_colouring(text: str, alphabet: Alphabet) -> Colouring:
    """const:c / len-mod:m / first-letter / letter-count:λ:m。"""
    kind, args = split_spec(text)
    if kind == "const":
        _expect_args(kind, args, 1)
        return constant_colouring(_int_arg(kind, args[0]))
    if kind == "len-mod":
        _expect_args(kind, args, 1)
        return length_mod_colouring(_int_arg(kind, args[0]))
    if kind == "first-letter":
        return first_letter_colouring(alphabet)
    if kind == "letter-count":
        _expect_args(kind, args, 2)
        return letter_count_colouring(parse_letter(args[0]), _int_arg(kind, args[1]))
    msg = f"未知の塗り分けです: {text!r} (const:c, len-mod:m, first-letter, letter-count:λ:m)"
    raise ValueError(msg)

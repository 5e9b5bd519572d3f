"""複数の動詞で共有する引数と、設定ファイルとの優先順位の解決。"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

from ramsey_spaces.data_formats.cnf_text import parse_cnf
from ramsey_spaces.domain.alternation.constraint import RelationSpace
from ramsey_spaces.domain.coding.context import CodingContext
from ramsey_spaces.domain.ordinals.bijection import default_bijection
from ramsey_spaces.presentation.cli.specs import (
    parse_bijection,
    parse_constraint,
    parse_partition,
    parse_relation,
    target_for,
)

if TYPE_CHECKING:
    import argparse
    from collections.abc import Callable

    from ramsey_spaces.application.search.cancellation import CancellationToken
    from ramsey_spaces.domain.eqrel.stream import EqRelStream
    from ramsey_spaces.domain.ordinals.bijection import OmegaBijection
    from ramsey_spaces.domain.ordinals.ordinal_eqrel import TransferTarget
    from ramsey_spaces.infrastructure.config.schema import AppSettingsData

DEFAULT_PARTITION = "mod:2"
DEFAULT_CONSTRAINT = "geq"
DEFAULT_RELATION = "canonical"
DEFAULT_BETA = "w"

type AddParser = Callable[..., argparse.ArgumentParser]


@dataclass(frozen=True)
class Invocation:
    """1回の実行で動詞が共有する設定と打ち切り要求。"""

    settings: AppSettingsData
    token: CancellationToken


def pick[T](flag: T | None, configured: T) -> T:
    """CLIのフラグが指定されていればそれを、無ければ設定ファイルの値を使う。"""
    return configured if flag is None else flag


def add_space_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--partition", default=DEFAULT_PARTITION, help="mod:l | periodic:b0,b1,... | dyadic"
    )
    parser.add_argument(
        "--constraint", default=DEFAULT_CONSTRAINT, help="geq | all | f-geq:<bijection>"
    )
    parser.add_argument("--beta", default=DEFAULT_BETA, help="α = ω・β の β (CNF)")


def add_relation_arguments(parser: argparse.ArgumentParser, *, with_n: bool = False) -> None:
    add_space_arguments(parser)
    parser.add_argument(
        "--relation",
        default=DEFAULT_RELATION,
        help="canonical | identity | random:<seed> | 代表元配列 (例: '0 1 0 3')",
    )
    parser.add_argument("--bijection", default=None, help="id | weight | swap:i:j | file:<path>")
    if with_n:
        parser.add_argument("--n", type=int, default=0, help="a = r_n(E) の n")


def add_depth_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--depth", type=int, default=None, help="検査する代表元の個数")


def add_seed_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=None, help="乱数のシード")


def build_bijection(args: argparse.Namespace) -> OmegaBijection:
    beta = parse_cnf(args.beta)
    if args.bijection is None:
        return default_bijection(beta)
    return parse_bijection(args.bijection, beta)


def build_space(args: argparse.Namespace) -> RelationSpace:
    return RelationSpace(
        parse_partition(args.partition), parse_constraint(args.constraint, parse_cnf(args.beta))
    )


def build_relation(
    args: argparse.Namespace, space: RelationSpace, settings: AppSettingsData
) -> EqRelStream:
    relation = parse_relation(args.relation, space)
    relation.scan_limit = settings.search.scan_limit
    return relation


def build_context(args: argparse.Namespace, settings: AppSettingsData) -> CodingContext:
    space = build_space(args)
    return CodingContext(build_relation(args, space, settings), space, args.n)


def build_target(args: argparse.Namespace) -> TransferTarget:
    return target_for(parse_partition(args.partition), build_bijection(args))


def relation_inputs(args: argparse.Namespace, space: RelationSpace) -> dict[str, Any]:
    """レポートの inputs に載せる関係の指定。"""
    data: dict[str, Any] = {
        "partition": space.partition.spec,
        "constraint": space.constraint.spec,
        "relation": args.relation,
    }
    if hasattr(args, "n"):
        data["n"] = args.n
    return data

"""順序数側の動詞: transfer, project, validate-ordinal, divide-omega。"""

from __future__ import annotations

from typing import TYPE_CHECKING, Any

from ramsey_spaces.data_formats.cnf_text import format_elem, parse_cnf
from ramsey_spaces.data_formats.report_document import ExperimentReport
from ramsey_spaces.domain.ordinals.cnf import OMEGA, divide_by_omega, format_cnf
from ramsey_spaces.domain.ordinals.ordinal_eqrel import OrdinalEqRel, phi
from ramsey_spaces.domain.ordinals.rigid import eqrel_to_rigid
from ramsey_spaces.domain.ordinals.transfer import (
    TransferError,
    project_k,
    representatives_preserved,
    space_for,
    transfer,
    validate_ordinal_space,
)
from ramsey_spaces.presentation.cli.options import (
    DEFAULT_BETA,
    DEFAULT_PARTITION,
    DEFAULT_RELATION,
    add_depth_argument,
    build_bijection,
    build_relation,
    pick,
)
from ramsey_spaces.presentation.cli.specs import parse_partition, target_for

if TYPE_CHECKING:
    import argparse
    from collections.abc import Iterable

    from ramsey_spaces.data_formats.report_document import ReportStatus
    from ramsey_spaces.domain.alternation.partition import Partition
    from ramsey_spaces.domain.eqrel.stream import EqRelStream
    from ramsey_spaces.domain.ordinals.ordinal_eqrel import OrdinalElem, TransferTarget
    from ramsey_spaces.presentation.cli.options import AddParser, Invocation


def _format_elems(elems: Iterable[OrdinalElem]) -> list[str]:
    return [format_elem(elem) for elem in elems]


def _format_classes(relation: OrdinalEqRel, size: int) -> list[str]:
    return [" ".join(_format_elems(group)) for group in relation.classes_in(size)]


def _ordinal_setup(
    args: argparse.Namespace, invocation: Invocation
) -> tuple[Partition, TransferTarget, EqRelStream, dict[str, Any]]:
    """分割と target を決め、target へ写せる空間の関係を作る。"""
    partition = parse_partition(args.partition)
    target = target_for(partition, build_bijection(args))
    space = space_for(partition, target)
    relation = build_relation(args, space, invocation.settings)
    inputs = {
        "partition": partition.spec,
        "constraint": space.constraint.spec,
        "relation": args.relation,
        "target": target.spec,
        "alpha": format_cnf(target.alpha),
    }
    return partition, target, relation, inputs


def run_transfer(args: argparse.Namespace, invocation: Invocation) -> ExperimentReport:
    partition, target, relation, inputs = _ordinal_setup(args, invocation)
    depth = pick(args.depth, invocation.settings.search.depth)
    inputs["depth"] = depth
    try:
        image = transfer(relation, partition, target, depth)
    except TransferError as e:
        return ExperimentReport("transfer", "violation", inputs, {"reason": str(e)})

    window = image.window_for(depth)
    result: dict[str, Any] = {
        "phi_of_reps": _format_elems(phi(relation.rep(k), partition, target) for k in range(depth)),
        "order_reps": _format_elems(image.order_reps(depth)),
        "representatives_preserved": representatives_preserved(relation, image, depth),
        "window": window,
        "classes": _format_classes(image, window),
    }
    if args.rigid:
        rigid = eqrel_to_rigid(image, window, depth)
        result["rigid"] = [
            f"{format_elem(elem)} -> {format_elem(rigid.image(elem))}" for elem in rigid.domain()
        ]
    status: ReportStatus = "ok" if result["representatives_preserved"] else "violation"
    return ExperimentReport("transfer", status, inputs, result)


def run_project(args: argparse.Namespace, invocation: Invocation) -> ExperimentReport:
    partition, target, relation, inputs = _ordinal_setup(args, invocation)
    depth = pick(args.depth, invocation.settings.search.depth)
    inputs.update({"depth": depth, "k": args.k})
    try:
        image = transfer(relation, partition, target, depth)
    except TransferError as e:
        return ExperimentReport("project", "violation", inputs, {"reason": str(e)})

    projected = project_k(image, args.k)
    window = image.window_for(max(depth, args.k))
    return ExperimentReport(
        "project",
        "ok",
        inputs,
        {
            "order_reps": _format_elems(projected.order_reps(args.k)),
            "window": window,
            "classes": _format_classes(projected, window),
        },
    )


def run_validate_ordinal(args: argparse.Namespace, invocation: Invocation) -> ExperimentReport:
    partition, target, relation, inputs = _ordinal_setup(args, invocation)
    depth = pick(args.depth, invocation.settings.search.depth)
    inputs["depth"] = depth
    image = OrdinalEqRel(relation, partition, target, scan_limit=relation.scan_limit)
    violation = validate_ordinal_space(image, depth)
    if violation is not None:
        return ExperimentReport(
            "validate-ordinal",
            "violation",
            inputs,
            {"violation": violation.to_dict(), "reason": violation.describe()},
        )
    return ExperimentReport(
        "validate-ordinal",
        "ok",
        inputs,
        {"order_reps": _format_elems(image.order_reps(depth))},
    )


def run_divide_omega(args: argparse.Namespace, _invocation: Invocation) -> ExperimentReport:
    alpha = parse_cnf(args.alpha)
    beta = divide_by_omega(alpha)
    return ExperimentReport(
        "divide-omega",
        "ok",
        {"alpha": format_cnf(alpha)},
        {"beta": format_cnf(beta), "omega_times_beta": format_cnf(OMEGA * beta)},
    )


def _add_ordinal_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--partition", default=DEFAULT_PARTITION, help="mod:l | dyadic")
    parser.add_argument("--beta", default=DEFAULT_BETA, help="α = ω・β の β (CNF)")
    parser.add_argument("--bijection", default=None, help="id | weight | swap:i:j | file:<path>")
    parser.add_argument(
        "--relation", default=DEFAULT_RELATION, help="canonical | random:<seed> | 代表元配列"
    )
    add_depth_argument(parser)


def register(add_parser: AddParser) -> None:
    parser = add_parser("transfer", help="ω 上の関係を α 上の関係へ写す")
    _add_ordinal_arguments(parser)
    parser.add_argument("--rigid", action="store_true", help="対応する剛な全射も出力する")
    parser.set_defaults(handler=run_transfer)

    parser = add_parser("project", help="写した関係を k クラスへ射影する")
    _add_ordinal_arguments(parser)
    parser.add_argument("--k", type=int, required=True, help="残すクラスの数")
    parser.set_defaults(handler=run_project)

    parser = add_parser("validate-ordinal", help="α 上の関係が条件 (a), (b) を満たすかを調べる")
    _add_ordinal_arguments(parser)
    parser.set_defaults(handler=run_validate_ordinal)

    parser = add_parser("divide-omega", help="α = ω・β となる β を求める")
    parser.add_argument("--alpha", required=True, help="極限順序数 α (CNF, 例: 'w^2*3 + w*5')")
    parser.set_defaults(handler=run_divide_omega)

"""ω 上の関係と語の符号化を扱う動詞: validate, encode, decode, expand, build-f。"""

from __future__ import annotations

import argparse
from typing import TYPE_CHECKING, Any

from ramsey_spaces.data_formats.eqrel_text import format_eqrel, parse_eqrel
from ramsey_spaces.data_formats.report_document import ExperimentReport
from ramsey_spaces.data_formats.word_text import format_word, parse_word
from ramsey_spaces.domain.alternation.construction import ConstructionError
from ramsey_spaces.domain.alternation.validators import (
    validate_alternating,
    validate_class_constraint,
)
from ramsey_spaces.domain.coding.certificate import expand_certificate
from ramsey_spaces.domain.coding.codec import decode_word, encode_extension, tilde_reduce
from ramsey_spaces.domain.coding.construction import build_F
from ramsey_spaces.infrastructure.storage.certificate_file import load_certificate
from ramsey_spaces.presentation.cli.options import (
    add_depth_argument,
    add_relation_arguments,
    build_context,
    build_relation,
    build_space,
    pick,
    relation_inputs,
)

if TYPE_CHECKING:
    from ramsey_spaces.domain.alternation.constraint import RelationSpace
    from ramsey_spaces.domain.coding.context import CodingContext
    from ramsey_spaces.domain.eqrel.stream import EqRelStream
    from ramsey_spaces.domain.words.word import Word
    from ramsey_spaces.presentation.cli.options import AddParser, Invocation


def _violations(relation: EqRelStream, space: RelationSpace, depth: int) -> list[dict[str, Any]]:
    found: list[dict[str, Any]] = []
    try:
        alternation = validate_alternating(relation, space.partition, depth)
        if alternation is not None:
            found.append(alternation.to_dict())
        if space.constrained:
            constraint = validate_class_constraint(
                relation, space.partition, space.constraint, depth
            )
            if constraint is not None:
                found.append(constraint.to_dict())
    except ConstructionError as e:
        found.append({"condition": "construction", "element": e.witness, "reason": str(e)})
    return found


def run_validate(args: argparse.Namespace, invocation: Invocation) -> ExperimentReport:
    settings = invocation.settings
    space = build_space(args)
    relation = build_relation(args, space, settings)
    depth = pick(args.depth, settings.search.depth)
    violations = _violations(relation, space, depth)
    result: dict[str, Any] = {"violations": violations}
    if not violations:
        result["prefix"] = format_eqrel(relation.approx(depth))
    return ExperimentReport(
        "validate",
        "violation" if violations else "ok",
        {**relation_inputs(args, space), "depth": depth},
        result,
    )


def run_encode(args: argparse.Namespace, invocation: Invocation) -> ExperimentReport:
    settings = invocation.settings
    ctx = build_context(args, settings)
    extension = parse_eqrel(args.extension)
    word = encode_extension(ctx, extension)
    return ExperimentReport(
        "encode",
        "ok",
        {**relation_inputs(args, ctx.space), "extension": format_eqrel(extension)},
        {"word": format_word(word), "letters": len(word), "context": ctx.describe()},
    )


def run_decode(args: argparse.Namespace, invocation: Invocation) -> ExperimentReport:
    settings = invocation.settings
    ctx = build_context(args, settings)
    word = parse_word(args.word)
    extension = decode_word(ctx, word)
    result: dict[str, Any] = {
        "extension": format_eqrel(extension),
        "classes": extension.length,
        "context": ctx.describe(),
    }
    if ctx.constrained:
        result["reduced"] = format_word(tilde_reduce(ctx, word))
    return ExperimentReport(
        "decode", "ok", {**relation_inputs(args, ctx.space), "word": format_word(word)}, result
    )


def _certificate_words(args: argparse.Namespace) -> tuple[Word, tuple[Word, ...]]:
    if args.certificate is not None:
        document = load_certificate(args.certificate)
        return document.w0, document.xs
    if not args.x:
        msg = "--certificate か、少なくとも1つの --x を指定してください。"
        raise ValueError(msg)
    return parse_word(args.w0), tuple(parse_word(x) for x in args.x)


def _certificate_inputs(w0: Word, xs: tuple[Word, ...]) -> dict[str, Any]:
    return {"w0": format_word(w0), "X": [format_word(x) for x in xs]}


def run_expand(args: argparse.Namespace, invocation: Invocation) -> ExperimentReport:
    settings = invocation.settings
    ctx = build_context(args, settings)
    w0, xs = _certificate_words(args)
    expanded = expand_certificate(ctx, w0, xs)
    return ExperimentReport(
        "expand",
        "ok",
        {**relation_inputs(args, ctx.space), **_certificate_inputs(w0, xs)},
        {
            "u0": format_word(expanded.u0),
            "ys": [format_word(y) for y in expanded.ys],
            "reach": expanded.reach,
        },
    )


def _build_f_result(
    ctx: CodingContext, args: argparse.Namespace, depth: int, w0: Word, xs: tuple[Word, ...]
) -> tuple[dict[str, Any], list[dict[str, Any]]]:
    expanded = expand_certificate(ctx, w0, xs)
    relation_f = build_F(ctx, expanded.u0, expanded.ys, constrained=args.tilde)
    violations = _violations(relation_f, ctx.space, depth)
    restricts = relation_f.approx(ctx.n) == ctx.a
    if not restricts:
        violations.append({"condition": "restriction", "n": ctx.n})
    result = {
        "u0": format_word(expanded.u0),
        "ys": [format_word(y) for y in expanded.ys],
        "f_prefix": format_eqrel(relation_f.approx(ctx.n + 1 + len(xs))),
        "reps": list(relation_f.reps(depth)),
        "restricts_to_a": restricts,
        "violations": violations,
    }
    return result, violations


def run_build_f(args: argparse.Namespace, invocation: Invocation) -> ExperimentReport:
    settings = invocation.settings
    ctx = build_context(args, settings)
    w0, xs = _certificate_words(args)
    depth = pick(args.depth, settings.search.depth)
    result, violations = _build_f_result(ctx, args, depth, w0, xs)
    return ExperimentReport(
        "build-f",
        "violation" if violations else "ok",
        {**relation_inputs(args, ctx.space), **_certificate_inputs(w0, xs), "depth": depth},
        result,
    )


def _add_certificate_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--certificate", default=None, help="証明書ファイル (JSON)")
    parser.add_argument("--w0", default="ε", help="w0 (L_0 上の語)")
    parser.add_argument(
        "--x", action="append", default=[], help="左変数語 x_i (繰り返し指定)"
    )


def register(add_parser: AddParser) -> None:
    parser = add_parser("validate", help="関係が交代的で制約を満たすかを調べる")
    add_relation_arguments(parser)
    add_depth_argument(parser)
    parser.set_defaults(handler=run_validate)

    parser = add_parser("encode", help="端拡大 b を語 w^b に符号化する")
    add_relation_arguments(parser, with_n=True)
    parser.add_argument("--extension", required=True, help="b の代表元配列")
    parser.set_defaults(handler=run_encode)

    parser = add_parser("decode", help="語 w が表す端拡大 b(w) を求める")
    add_relation_arguments(parser, with_n=True)
    parser.add_argument("--word", required=True, help="L_0 上の語")
    parser.set_defaults(handler=run_decode)

    parser = add_parser("expand", help="証明書を {0..n} ∪ {v} 上の語へ展開する")
    add_relation_arguments(parser, with_n=True)
    _add_certificate_arguments(parser)
    parser.set_defaults(handler=run_expand)

    parser = add_parser("build-f", help="証明書から E の粗化 F を作り検査する")
    add_relation_arguments(parser, with_n=True)
    _add_certificate_arguments(parser)
    add_depth_argument(parser)
    parser.add_argument(
        "--tilde",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="併合できない座標を 0 に置き換える (既定: 制約付きの空間なら有効)",
    )
    parser.set_defaults(handler=run_build_f)

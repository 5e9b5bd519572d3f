"""探索と実験の動詞: hj-search, pigeonhole, miniature, axioms。"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import TYPE_CHECKING, Any

import numpy as np

from ramsey_spaces.application.experiments.axioms import AXIOMS, axiom_probe
from ramsey_spaces.application.experiments.colouring import ClopenColouring, ClopenPredicate
from ramsey_spaces.application.experiments.miniature import miniature_dual_ramsey
from ramsey_spaces.application.experiments.pigeonhole import (
    PigeonholeSettings,
    pigeonhole_probe,
)
from ramsey_spaces.data_formats.certificate_document import CertificateDocument
from ramsey_spaces.data_formats.report_document import ExperimentReport
from ramsey_spaces.data_formats.word_text import format_word
from ramsey_spaces.domain.words.hales_jewett import (
    HJCertificate,
    SearchHooks,
    lv_hj_bounded_search,
)
from ramsey_spaces.domain.words.semigroup import verify_monochromatic
from ramsey_spaces.infrastructure.storage.certificate_file import save_certificate
from ramsey_spaces.presentation.cli.options import (
    add_depth_argument,
    add_relation_arguments,
    add_seed_argument,
    add_space_arguments,
    build_context,
    build_space,
    pick,
    relation_inputs,
)
from ramsey_spaces.presentation.cli.specs import (
    parse_alphabet,
    parse_colouring,
    parse_predicate,
)

if TYPE_CHECKING:
    import argparse

    from ramsey_spaces.application.experiments.colouring import ExtensionPredicate
    from ramsey_spaces.application.experiments.pigeonhole import PigeonholeOutcome
    from ramsey_spaces.data_formats.report_document import ReportStatus
    from ramsey_spaces.domain.coding.context import CodingContext
    from ramsey_spaces.presentation.cli.options import AddParser, Invocation

DEFAULT_ALPHABET = "digits:2"
DEFAULT_COLOURING = "len-mod:2"
DEFAULT_PREDICATE = "all"
DEFAULT_DECISION_DEPTH = 8
DEFAULT_CLOPEN_COLOURS = 2


def run_hj_search(args: argparse.Namespace, invocation: Invocation) -> ExperimentReport:
    settings = invocation.settings
    ctx = build_context(args, settings) if args.alphabet.strip().lower() == "coding" else None
    alphabet = parse_alphabet(args.alphabet, ctx)
    k = pick(args.k, settings.search.k)
    budget = pick(args.budget, settings.search.budget)
    inputs: dict[str, Any] = {
        "alphabet": args.alphabet,
        "colouring": args.colouring,
        "k": k,
        "budget": budget,
        "include_base": args.include_base,
    }
    if ctx is not None:
        inputs.update(relation_inputs(args, ctx.space))

    def check(_: int) -> None:
        invocation.token.raise_if_cancelled()

    found = lv_hj_bounded_search(
        alphabet,
        parse_colouring(args.colouring, alphabet),
        k,
        budget,
        mode=args.mode,
        include_base=args.include_base,
        translate_limit=settings.search.translate_limit,
        hooks=SearchHooks(on_candidate=check),
    )
    if not isinstance(found, HJCertificate):
        return ExperimentReport(
            "hj-search",
            "exhausted",
            inputs,
            {"candidates_tried": found.candidates_tried, "largest_size": found.largest_size},
        )

    # 新しく作った塗り分けで再検証する
    counterexample = verify_monochromatic(
        found.w0,
        found.xs,
        parse_colouring(args.colouring, alphabet),
        alphabet,
        found.mode,
        budget,
        include_base=args.include_base,
    )
    document = CertificateDocument.from_certificate(found, alphabet)
    if args.save_certificate is not None and counterexample is None:
        save_certificate(document, args.save_certificate)
    result: dict[str, Any] = {
        "w0": format_word(found.w0),
        "X": [format_word(x) for x in found.xs],
        "mode": found.mode,
        "colour": found.colour,
        "size": found.size,
        "candidates_tried": found.candidates_tried,
        "reverified": counterexample is None,
    }
    if counterexample is not None:
        result["counterexample"] = format_word(counterexample.word)
    return ExperimentReport(
        "hj-search", "found" if counterexample is None else "failed", inputs, result
    )


def _pigeonhole_settings(args: argparse.Namespace, invocation: Invocation) -> PigeonholeSettings:
    search = invocation.settings.search
    return PigeonholeSettings(
        k=pick(args.k, search.k),
        len_budget=pick(args.budget, search.budget),
        probe_depth=pick(args.depth, search.depth),
        translate_limit=search.translate_limit,
        extension_limit=search.extension_limit,
    )


def _batch_status(outcomes: list[PigeonholeOutcome]) -> ReportStatus:
    statuses = [outcome.status for outcome in outcomes]
    if "failed" in statuses:
        return "failed"
    if "certified" not in statuses:
        return "exhausted"
    return "certified"


def _run_pigeonhole_batch(
    args: argparse.Namespace,
    invocation: Invocation,
    ctx: CodingContext,
    probe_settings: PigeonholeSettings,
) -> ExperimentReport:
    experiments = invocation.settings.experiments
    seed = pick(args.seed, experiments.seed)
    count = pick(args.colourings, experiments.pigeonhole_colourings)
    if count < 1:
        msg = f"--colourings は1以上にしてください: {count}"
        raise ValueError(msg)
    seeds = np.random.default_rng(seed).integers(2**31, size=count)
    predicates: list[ExtensionPredicate] = [
        ClopenPredicate(ClopenColouring(args.decision_depth, args.colours, int(child)))
        for child in seeds
    ]

    def probe(predicate: ExtensionPredicate) -> PigeonholeOutcome:
        return pigeonhole_probe(ctx, predicate, probe_settings, token=invocation.token)

    workers = pick(args.workers, experiments.workers)
    with ThreadPoolExecutor(max_workers=workers) as executor:
        outcomes = list(executor.map(probe, predicates))

    inputs = {
        **relation_inputs(args, ctx.space),
        **probe_settings.to_dict(),
        "colourings": count,
        "decision_depth": args.decision_depth,
        "colours": args.colours,
    }
    result = {
        "runs": count,
        "certified": sum(1 for outcome in outcomes if outcome.status == "certified"),
        "exhausted": sum(1 for outcome in outcomes if outcome.status == "exhausted"),
        "failed": sum(1 for outcome in outcomes if outcome.status == "failed"),
        "outcomes": [
            {
                "predicate": predicate.spec,
                "status": outcome.status,
                "side": outcome.to_dict().get("side"),
            }
            for predicate, outcome in zip(predicates, outcomes, strict=True)
        ],
    }
    return ExperimentReport("pigeonhole", _batch_status(outcomes), inputs, result, seed=seed)


def run_pigeonhole(args: argparse.Namespace, invocation: Invocation) -> ExperimentReport:
    ctx = build_context(args, invocation.settings)
    probe_settings = _pigeonhole_settings(args, invocation)
    if args.batch:
        return _run_pigeonhole_batch(args, invocation, ctx, probe_settings)
    predicate = parse_predicate(args.predicate)
    outcome = pigeonhole_probe(ctx, predicate, probe_settings, token=invocation.token)
    return ExperimentReport(
        "pigeonhole",
        outcome.status,
        {
            **relation_inputs(args, ctx.space),
            **probe_settings.to_dict(),
            "predicate": predicate.spec,
        },
        outcome.to_dict(),
    )


def run_miniature(args: argparse.Namespace, invocation: Invocation) -> ExperimentReport:
    experiments = invocation.settings.experiments
    seed = pick(args.seed, experiments.seed)
    outcome = miniature_dual_ramsey(
        args.m,
        args.k,
        args.r,
        threshold=pick(args.threshold, experiments.miniature_threshold),
        samples=pick(args.samples, experiments.miniature_samples),
        seed=seed,
        workers=pick(args.workers, experiments.workers),
        token=invocation.token,
    )
    result = outcome.to_dict()
    if args.summary:
        result.pop("verdicts")
    return ExperimentReport(
        "miniature",
        "ok",
        {"m": args.m, "k": args.k, "r": args.r},
        result,
        seed=outcome.seed,
    )


def run_axioms(args: argparse.Namespace, invocation: Invocation) -> ExperimentReport:
    settings = invocation.settings
    space = build_space(args)
    depth = pick(args.depth, settings.search.depth)
    seed = pick(args.seed, settings.experiments.seed)
    corpus_size = pick(args.corpus_size, settings.experiments.corpus_size)
    which = AXIOMS if args.which == "all" else (args.which,)
    outcomes = [
        axiom_probe(
            space,
            axiom,
            depth,
            corpus_size=corpus_size,
            seed=seed,
            witness_limit=args.witness_limit,
            token=invocation.token,
        )
        for axiom in which
    ]
    return ExperimentReport(
        "axioms",
        "ok" if all(outcome.holds for outcome in outcomes) else "violation",
        {
            "partition": space.partition.spec,
            "constraint": space.constraint.spec,
            "which": args.which,
            "depth": depth,
            "corpus_size": corpus_size,
        },
        {outcome.which: outcome.to_dict() for outcome in outcomes},
        seed=seed,
    )


def _add_search_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--k", type=int, default=None, help="変数語の個数")
    parser.add_argument(
        "--budget", type=int, default=None, help="|w0| + Σ|x_i| の上限 (長さの予算)"
    )


def register(add_parser: AddParser) -> None:
    parser = add_parser("hj-search", help="w0⌢[X] が単色になる証明書を予算内で探す")
    add_relation_arguments(parser, with_n=True)
    _add_search_arguments(parser)
    parser.add_argument(
        "--alphabet", default=DEFAULT_ALPHABET, help="digits:k | tuples:b:a | coding"
    )
    parser.add_argument(
        "--colouring",
        default=DEFAULT_COLOURING,
        help="const:c | len-mod:m | first-letter | letter-count:λ:m",
    )
    parser.add_argument("--mode", choices=("plain", "graded"), default=None)
    parser.add_argument(
        "--include-base", action="store_true", help="w0 自身も同じ色であることを要求する"
    )
    parser.add_argument("--save-certificate", default=None, help="証明書の保存先 (JSON)")
    parser.set_defaults(handler=run_hj_search)

    parser = add_parser("pigeonhole", help="端拡大の集合 O について鳩の巣の結論を確かめる")
    add_relation_arguments(parser, with_n=True)
    _add_search_arguments(parser)
    add_depth_argument(parser)
    add_seed_argument(parser)
    parser.add_argument(
        "--predicate",
        default=DEFAULT_PREDICATE,
        help="all | first-join:t | lambda-parity | clopen:d:r:seed",
    )
    parser.add_argument(
        "--batch", action="store_true", help="シードから作った clopen な塗り分けでまとめて調べる"
    )
    parser.add_argument("--colourings", type=int, default=None, help="--batch の塗り分けの数")
    parser.add_argument("--decision-depth", type=int, default=DEFAULT_DECISION_DEPTH)
    parser.add_argument("--colours", type=int, default=DEFAULT_CLOPEN_COLOURS)
    parser.add_argument("--workers", type=int, default=None)
    parser.set_defaults(handler=run_pigeonhole)

    parser = add_parser("miniature", help="有限の双対ラムゼー定理を全数検査する")
    parser.add_argument("--m", type=int, default=4, help="点の数")
    parser.add_argument("--k", type=int, default=2, help="塗り分けるクラス数")
    parser.add_argument("--r", type=int, default=2, help="色の数")
    parser.add_argument("--threshold", type=int, default=None, help="全数検査する塗り分けの上限")
    parser.add_argument("--samples", type=int, default=None, help="閾値を超えたときの抽出数")
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--summary", action="store_true", help="塗り分けごとの判定を省く")
    add_seed_argument(parser)
    parser.set_defaults(handler=run_miniature)

    parser = add_parser("axioms", help="公理 A.1-A.3 を生成した関係の上で反証しようとする")
    add_space_arguments(parser)
    add_depth_argument(parser)
    add_seed_argument(parser)
    parser.add_argument("--which", choices=(*AXIOMS, "all"), default="all")
    parser.add_argument("--corpus-size", type=int, default=None)
    parser.add_argument("--witness-limit", type=int, default=32)
    parser.set_defaults(handler=run_axioms)

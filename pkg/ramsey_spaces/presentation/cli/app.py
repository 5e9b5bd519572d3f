"""コマンドラインの組み立てと、1回の実行の流れ。"""

from __future__ import annotations

import logging
import sys
import time
from functools import partial
from typing import TYPE_CHECKING

from ramsey_spaces.application.search.cancellation import CancellationToken, SearchCancelled
from ramsey_spaces.bootstrap import create_report_sink, create_settings
from ramsey_spaces.data_formats.report_document import REPORT_FORMATS, ExperimentReport
from ramsey_spaces.domain.eqrel.stream import StreamScanLimitError
from ramsey_spaces.presentation.cli.commands import experiments, ordinals, relations
from ramsey_spaces.presentation.cli.errors import (
    EXIT_BAD_INPUT,
    EXIT_EXHAUSTED,
    EXIT_OK,
    EXIT_VIOLATION,
    CliArgumentParser,
    CliUsageError,
)
from ramsey_spaces.presentation.cli.options import Invocation, pick

if TYPE_CHECKING:
    import argparse
    from collections.abc import Sequence

    from ramsey_spaces.application.ports.report_sink import ReportSink
    from ramsey_spaces.data_formats.report_document import ReportStatus

logger = logging.getLogger(__name__)

PROG = "ramsey-spaces"

EXIT_CODES: dict[ReportStatus, int] = {
    "ok": EXIT_OK,
    "found": EXIT_OK,
    "certified": EXIT_OK,
    "exhausted": EXIT_EXHAUSTED,
    "violation": EXIT_VIOLATION,
    "failed": EXIT_VIOLATION,
}


def _common_options() -> CliArgumentParser:
    """どの動詞の後ろにも書ける共通オプション。"""
    common = CliArgumentParser(add_help=False)
    common.add_argument("--settings", default=None, help="settings.json のパス")
    common.add_argument("--format", choices=REPORT_FORMATS, default=None, help="出力形式")
    common.add_argument("--out", default=None, help="レポートの保存先 (既定: 標準出力)")
    common.add_argument("--timing", action="store_true", help="経過時間をレポートに含める")
    common.add_argument(
        "--time-limit", type=float, default=None, help="探索の制限時間 (秒)"
    )
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", action="store_true", help="DEBUG ログを出す")
    verbosity.add_argument("--quiet", action="store_true", help="WARNING 以上だけを出す")
    return common


def build_parser() -> CliArgumentParser:
    parser = CliArgumentParser(
        prog=PROG,
        description="ω 上の交代的同値関係の空間と、その順序数への移送を調べる実験ツール",
    )
    subparsers = parser.add_subparsers(dest="verb", required=True, metavar="VERB")
    add_parser = partial(subparsers.add_parser, parents=[_common_options()])
    relations.register(add_parser)
    experiments.register(add_parser)
    ordinals.register(add_parser)
    return parser


def _apply_verbosity(args: argparse.Namespace) -> None:
    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)
    elif args.quiet:
        logging.getLogger().setLevel(logging.WARNING)


def _execute(args: argparse.Namespace, invocation: Invocation) -> ExperimentReport:
    try:
        return args.handler(args, invocation)
    except SearchCancelled as e:
        logger.warning("%s: %s", args.verb, e)
        return ExperimentReport(
            args.verb, "exhausted", {}, {"cancelled": True, "reason": e.reason}
        )


def run(
    argv: Sequence[str] | None = None,
    *,
    sink: ReportSink | None = None,
    token: CancellationToken | None = None,
) -> int:
    """CLIを1回実行し、終了コードを返す。

    レポートの status が終了コードを決める。入力の誤りはレポートを出さずに 4 を返す。
    """
    try:
        args = build_parser().parse_args(argv)
    except CliUsageError as e:
        print(e, file=sys.stderr)
        return EXIT_BAD_INPUT

    _apply_verbosity(args)
    settings = create_settings(args.settings)
    token = token or CancellationToken()

    started = time.perf_counter()
    try:
        if args.time_limit is not None:
            token.set_time_limit(args.time_limit)
        report = _execute(args, Invocation(settings, token))
    except (ValueError, ArithmeticError, StreamScanLimitError) as e:
        logger.debug("入力エラー", exc_info=True)
        print(f"{PROG} {args.verb}: {e}", file=sys.stderr)
        return EXIT_BAD_INPUT
    elapsed = time.perf_counter() - started
    logger.info("%s: %s (%.3f 秒)", args.verb, report.status, elapsed)

    if args.timing or settings.output.timing:
        report = report.with_wall_time(elapsed)
    output_format = pick(args.format, settings.output.format)
    try:
        (sink or create_report_sink(args.out)).write(report, output_format)
    except OSError as e:
        logger.exception("レポートを書き込めませんでした")
        print(f"{PROG} {args.verb}: {e}", file=sys.stderr)
        return EXIT_BAD_INPUT
    return EXIT_CODES[report.status]

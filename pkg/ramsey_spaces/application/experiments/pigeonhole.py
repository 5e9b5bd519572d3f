from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any, Literal

from ramsey_spaces.data_formats.eqrel_text import format_eqrel
from ramsey_spaces.data_formats.word_text import format_word
from ramsey_spaces.domain.alternation.validators import (
    validate_alternating,
    validate_class_constraint,
)
from ramsey_spaces.domain.coding.certificate import expand_certificate
from ramsey_spaces.domain.coding.construction import build_F, end_extensions_within_reach
from ramsey_spaces.domain.words.hales_jewett import (
    HJCertificate,
    SearchHooks,
    lv_hj_bounded_search,
)
from ramsey_spaces.domain.words.semigroup import verify_monochromatic

if TYPE_CHECKING:
    from ramsey_spaces.application.experiments.colouring import ExtensionPredicate
    from ramsey_spaces.application.search.cancellation import CancellationToken
    from ramsey_spaces.domain.coding.certificate import ExpandedCertificate
    from ramsey_spaces.domain.coding.context import CodingContext
    from ramsey_spaces.domain.words.hales_jewett import SearchExhausted

logger = logging.getLogger(__name__)

PigeonholeStatus = Literal["certified", "exhausted", "failed"]


@dataclass(frozen=True)
class PigeonholeSettings:
    """鳩の巣探索の予算。"""

    k: int = 2
    len_budget: int = 10
    probe_depth: int = 8
    translate_limit: int | None = 4096
    extension_limit: int | None = 256

    def __post_init__(self) -> None:
        if self.k < 1:
            msg = f"k は1以上にしてください: {self.k}"
            raise ValueError(msg)
        if self.probe_depth < 1:
            msg = f"probe_depth は1以上にしてください: {self.probe_depth}"
            raise ValueError(msg)

    def to_dict(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "len_budget": self.len_budget,
            "probe_depth": self.probe_depth,
            "translate_limit": self.translate_limit,
            "extension_limit": self.extension_limit,
        }


@dataclass(frozen=True)
class PigeonholeOutcome:
    """r_{n+1}[a, F] ⊆ O か ⊆ O^c かの判定結果。side は certificate の色 (0 なら O 側)。"""

    status: PigeonholeStatus
    side: int | None = None
    certificate: HJCertificate | None = None
    exhausted: SearchExhausted | None = None
    expanded: ExpandedCertificate | None = None
    f_prefix: str | None = None
    violations: tuple[dict[str, object], ...] = ()
    extensions_checked: int = 0
    failures: tuple[str, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"status": self.status}
        if self.certificate is not None:
            data["side"] = "inside" if self.side == 0 else "outside"
            data["certificate"] = {
                "w0": format_word(self.certificate.w0),
                "X": [format_word(x) for x in self.certificate.xs],
                "mode": self.certificate.mode,
                "size": self.certificate.size,
                "candidates_tried": self.certificate.candidates_tried,
            }
        if self.exhausted is not None:
            data["exhausted"] = {
                "len_budget": self.exhausted.len_budget,
                "candidates_tried": self.exhausted.candidates_tried,
                "largest_size": self.exhausted.largest_size,
            }
        if self.expanded is not None:
            data["expanded"] = {
                "u0": format_word(self.expanded.u0),
                "ys": [format_word(y) for y in self.expanded.ys],
            }
        if self.f_prefix is not None:
            data["f_prefix"] = self.f_prefix
        data["violations"] = list(self.violations)
        data["extensions_checked"] = self.extensions_checked
        data["failures"] = list(self.failures)
        return data


def _cancellation_hooks(token: CancellationToken | None) -> SearchHooks | None:
    if token is None:
        return None

    def check(_: int) -> None:
        token.raise_if_cancelled()

    return SearchHooks(on_candidate=check, on_size_started=check)


def pigeonhole_probe(
    ctx: CodingContext,
    predicate: ExtensionPredicate,
    settings: PigeonholeSettings,
    *,
    token: CancellationToken | None = None,
) -> PigeonholeOutcome:
    """語の塗り分け c(w) = [b(w) ∉ O] で証明書を探し、F を作って結論を確かめる。

    証明書は独立に再検証し、F の交代性と F 上の予算内の端拡大の色を調べる。
    """
    colouring = predicate.word_colouring(ctx)
    result = lv_hj_bounded_search(
        ctx.alphabet,
        colouring,
        settings.k,
        settings.len_budget,
        include_base=True,
        translate_limit=settings.translate_limit,
        hooks=_cancellation_hooks(token),
    )
    if not isinstance(result, HJCertificate):
        logger.info("pigeonhole: 予算 %d 以内に証明書がありません。", settings.len_budget)
        return PigeonholeOutcome("exhausted", exhausted=result)

    failures: list[str] = []
    counterexample = verify_monochromatic(
        result.w0,
        result.xs,
        predicate.word_colouring(ctx),
        ctx.alphabet,
        result.mode,
        result.len_budget,
        include_base=True,
    )
    if counterexample is not None:
        failures.append(
            f"再検証で {format_word(counterexample.word)} の色が"
            f" {counterexample.colour} でした (期待値 {counterexample.expected_colour})。"
        )

    expanded = expand_certificate(ctx, result.w0, result.xs)
    relation_f = build_F(ctx, expanded.u0, expanded.ys)

    violations: list[dict[str, object]] = []
    alternation = validate_alternating(relation_f, ctx.partition, settings.probe_depth)
    if alternation is not None:
        violations.append(alternation.to_dict())
    if ctx.constrained:
        constraint = validate_class_constraint(
            relation_f, ctx.partition, ctx.constraint, settings.probe_depth
        )
        if constraint is not None:
            violations.append(constraint.to_dict())
    if relation_f.approx(ctx.n) != ctx.a:
        failures.append(f"r_{ctx.n}(F) が a と一致しません。")

    checked = 0
    for witness in end_extensions_within_reach(
        ctx, relation_f, result.w0, result.xs, expanded, limit=settings.extension_limit
    ):
        checked += 1
        if not witness.consistent:
            failures.append(
                f"端拡大 {format_eqrel(witness.extension)} と b({format_word(witness.word)})"
                " が一致しません。"
            )
        elif colouring(witness.word) != result.colour:
            failures.append(f"端拡大 {format_eqrel(witness.extension)} の色が異なります。")

    status: PigeonholeStatus = "failed" if failures or violations else "certified"
    logger.info(
        "pigeonhole: %s side=%d 端拡大 %d 件を確認", status, result.colour, checked
    )
    return PigeonholeOutcome(
        status,
        side=result.colour,
        certificate=result,
        expanded=expanded,
        f_prefix=format_eqrel(relation_f.approx(ctx.n + 1 + len(result.xs))),
        violations=tuple(violations),
        extensions_checked=checked,
        failures=tuple(failures),
    )

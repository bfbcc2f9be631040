"""Pair judgment pipeline, dataset loading and evaluation metrics.

The full pipeline chains three stages: overlap decision, negation
adjustment, sentiment-polarity adjustment. Both adjustments only apply
to a positive decision, so the extended mode can never accept a pair
the baseline rejected.

Datasets are JSON-lines: one object per line with keys ``id``,
``text``, ``hypothesis`` and an optional boolean ``entails`` gold
label. Metrics follow the usual definitions: accuracy is correct
decisions over all pairs, precision is correct entailments over
predicted entailments, recall is correct entailments over gold
entailments (zero denominators yield 0.0 and a report flag).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import DuplicateId, IoFailure, MalformedRecord, MissingGoldLabel
from .lexicons import Resources
from .negation import analyze_negation, negation_adjust
from .normalize import process_sentence
from .overlap import DEFAULT_THRESHOLDS, AteTrace, Decision, Thresholds, decide_pair
from .sentiment import PolarityResult, classify_polarity, sentiment_adjust


class Mode(str, Enum):
    ATE = "ate"
    SANATE = "sanate"


@dataclass(frozen=True)
class PairRecord:
    id: str
    text: str
    hypothesis: str
    gold: Decision | None = None


@dataclass(frozen=True)
class JudgmentTrace:
    """Everything recorded while judging one pair.

    ``stage_decisions`` holds the decision after each stage (overlap,
    negation, sentiment); the last two are None in baseline mode, where
    only the overlap stage runs.
    """

    mode: Mode
    ate: AteTrace
    negation_rule: str | None
    text_polarity: PolarityResult | None
    hyp_polarity: PolarityResult | None
    stage_decisions: tuple[Decision, Decision | None, Decision | None]
    final: Decision

    def to_dict(self) -> dict:
        return {
            "mode": self.mode.value,
            "ate": self.ate.to_dict(),
            "negation_rule": self.negation_rule,
            "text_polarity": self.text_polarity.to_dict() if self.text_polarity else None,
            "hyp_polarity": self.hyp_polarity.to_dict() if self.hyp_polarity else None,
            "stage_decisions": [
                d.value if d is not None else None for d in self.stage_decisions
            ],
            "final": self.final.value,
        }


@dataclass(frozen=True)
class EvalReport:
    """Aggregate metrics plus the per-pair gold/predicted table."""

    total: int
    correct: int
    accuracy: float
    predicted_entail: int
    correct_entail: int
    gold_entail: int
    precision: float
    recall: float
    per_pair: tuple[tuple[str, Decision, Decision], ...]
    flags: tuple[str, ...] = ()


def judge(
    pair: PairRecord,
    mode: Mode,
    resources: Resources,
    thresholds: Thresholds = DEFAULT_THRESHOLDS,
    sentiment_promote: bool = False,
) -> JudgmentTrace:
    """Judge one pair in the requested mode, recording every stage."""
    text = process_sentence(pair.text, resources.stop_words, resources.affixes)
    hyp = process_sentence(pair.hypothesis, resources.stop_words, resources.affixes)
    ate = decide_pair(text, hyp, resources.semantic, thresholds)

    if mode is Mode.ATE:
        return JudgmentTrace(
            mode=mode,
            ate=ate,
            negation_rule=None,
            text_polarity=None,
            hyp_polarity=None,
            stage_decisions=(ate.decision, None, None),
            final=ate.decision,
        )

    analysis = analyze_negation(text, hyp, resources.semantic)
    after_negation = negation_adjust(ate.decision, analysis)
    text_polarity = classify_polarity(text, resources.sentiment)
    hyp_polarity = classify_polarity(hyp, resources.sentiment)
    final = sentiment_adjust(
        after_negation, text_polarity, hyp_polarity, promote=sentiment_promote
    )
    return JudgmentTrace(
        mode=mode,
        ate=ate,
        negation_rule=analysis.fired_rule.value,
        text_polarity=text_polarity,
        hyp_polarity=hyp_polarity,
        stage_decisions=(ate.decision, after_negation, final),
        final=final,
    )


def load_dataset(path) -> list[PairRecord]:
    """Load a JSONL dataset, validating ids and required fields.

    Blank lines are skipped. Raises :class:`MalformedRecord` with the
    line number, :class:`DuplicateId`, or :class:`IoFailure`.
    """
    try:
        with open(path, encoding="utf-8") as handle:
            lines = handle.read().splitlines()
    except OSError as exc:
        raise IoFailure(f"cannot read dataset {path}: {exc}") from exc

    records: list[PairRecord] = []
    seen: set[str] = set()
    for number, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise MalformedRecord(number, f"invalid JSON ({exc.msg})") from exc
        if not isinstance(obj, dict):
            raise MalformedRecord(number, "record is not an object")
        for key in ("id", "text", "hypothesis"):
            if key not in obj:
                raise MalformedRecord(number, f"missing key {key!r}")
            if not isinstance(obj[key], str):
                raise MalformedRecord(number, f"key {key!r} is not a string")
        if not obj["text"] or not obj["hypothesis"]:
            raise MalformedRecord(number, "empty text or hypothesis")
        gold: Decision | None = None
        if "entails" in obj and obj["entails"] is not None:
            if not isinstance(obj["entails"], bool):
                raise MalformedRecord(number, "key 'entails' is not a boolean")
            gold = Decision.ENTAILS if obj["entails"] else Decision.NOT_ENTAILS
        pair_id = obj["id"]
        if pair_id in seen:
            raise DuplicateId(pair_id)
        seen.add(pair_id)
        records.append(
            PairRecord(id=pair_id, text=obj["text"], hypothesis=obj["hypothesis"], gold=gold)
        )
    return records


def evaluate(
    records: Sequence[PairRecord],
    mode: Mode,
    resources: Resources,
    thresholds: Thresholds = DEFAULT_THRESHOLDS,
    sentiment_promote: bool = False,
) -> EvalReport:
    """Judge every record and tally accuracy, precision and recall.

    Judgments are independent; the per-pair table preserves dataset
    order. Raises :class:`MissingGoldLabel` for unlabeled records.
    """
    for record in records:
        if record.gold is None:
            raise MissingGoldLabel(record.id)

    per_pair: list[tuple[str, Decision, Decision]] = []
    correct = 0
    predicted_entail = 0
    correct_entail = 0
    gold_entail = 0
    for record in records:
        predicted = judge(record, mode, resources, thresholds, sentiment_promote).final
        per_pair.append((record.id, record.gold, predicted))
        if record.gold is Decision.ENTAILS:
            gold_entail += 1
        if predicted is Decision.ENTAILS:
            predicted_entail += 1
            if record.gold is Decision.ENTAILS:
                correct_entail += 1
        if predicted is record.gold:
            correct += 1

    total = len(records)
    flags: list[str] = []
    if total == 0:
        flags.append("empty_dataset")
    if predicted_entail == 0:
        flags.append("zero_predicted_entail")
    if gold_entail == 0:
        flags.append("zero_gold_entail")
    return EvalReport(
        total=total,
        correct=correct,
        accuracy=correct / total if total else 0.0,
        predicted_entail=predicted_entail,
        correct_entail=correct_entail,
        gold_entail=gold_entail,
        precision=correct_entail / predicted_entail if predicted_entail else 0.0,
        recall=correct_entail / gold_entail if gold_entail else 0.0,
        per_pair=tuple(per_pair),
        flags=tuple(flags),
    )

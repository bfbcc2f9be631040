"""Lexical-overlap measures and the baseline entailment decision.

Given a processed text T (length m) and hypothesis H (length n) with c
common words, three overlap measures are computed:

    cos_t   = sqrt(c / m)
    cos_h   = sqrt(c / n)
    cos_hut = sqrt(4*c^2 / ((n + c) * (m + c)))

A pair entails when every gate passes:

    g0  m >= n >= c
    g1  cos_h >= cos_hut >= cos_t
    g2  cos_hut - cos_t <= tau1
    g3  cos_h - cos_hut <= tau2
    g4  max(cos_t, cos_h, cos_hut) >= tau3

A hypothesis word is common when some text word has the same stem or is
related to it in the semantic lexicon; each hypothesis occurrence
counts at most once, so c <= n always.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum

from .errors import DegenerateLength
from .lexicons import Resources, SemanticLexicon
from .normalize import ProcessedSentence, Token, process_sentence


class Decision(str, Enum):
    ENTAILS = "entails"
    NOT_ENTAILS = "not_entails"


@dataclass(frozen=True)
class Thresholds:
    """Gate thresholds; defaults are the experimentally tuned values."""

    tau1: float = 0.095
    tau2: float = 0.2
    tau3: float = 0.5


DEFAULT_THRESHOLDS = Thresholds()


@dataclass(frozen=True)
class OverlapMeasures:
    c: int
    m: int
    n: int
    cos_t: float
    cos_h: float
    cos_hut: float


@dataclass(frozen=True)
class AteTrace:
    """Record of every gate evaluated for one pair.

    All gates are evaluated even after a failure so the trace is
    complete; the decision is the conjunction of all of them.
    ``degenerate_length`` marks pairs whose text or hypothesis had no
    content tokens (measures forced to zero, decision NOT_ENTAILS).
    """

    measures: OverlapMeasures
    length_gate_passed: bool
    primary_condition_passed: bool
    condition4_passed: bool
    condition5_passed: bool
    condition6_passed: bool
    decision: Decision
    degenerate_length: bool = False

    def to_dict(self) -> dict:
        meas = self.measures
        return {
            "c": meas.c,
            "m": meas.m,
            "n": meas.n,
            "cos_t": meas.cos_t,
            "cos_h": meas.cos_h,
            "cos_hut": meas.cos_hut,
            "length_gate": self.length_gate_passed,
            "primary_condition": self.primary_condition_passed,
            "condition4": self.condition4_passed,
            "condition5": self.condition5_passed,
            "condition6": self.condition6_passed,
            "degenerate_length": self.degenerate_length,
            "decision": self.decision.value,
        }


def _matches(hyp_token: Token, text_stems: set[str], text_related: set[str]) -> bool:
    if hyp_token.stem in text_stems:
        return True
    return hyp_token.normalized in text_related or hyp_token.stem in text_related


def common_count(
    text: ProcessedSentence,
    hyp: ProcessedSentence,
    lexicon: SemanticLexicon,
) -> tuple[int, int, int]:
    """Count common words: returns (c, m, n) over content tokens."""
    m = len(text.content_tokens)
    n = len(hyp.content_tokens)
    text_stems = {t.stem for t in text.content_tokens}
    text_related: set[str] = set()
    for token in text.content_tokens:
        text_related |= lexicon.related(token.normalized)
        text_related |= lexicon.related(token.stem)
    c = sum(1 for h in hyp.content_tokens if _matches(h, text_stems, text_related))
    return c, m, n


def measures(c: int, m: int, n: int) -> OverlapMeasures:
    """Compute the three overlap measures.

    Raises :class:`DegenerateLength` when m or n is zero; callers map
    that case to NOT_ENTAILS.
    """
    if m == 0 or n == 0:
        raise DegenerateLength(m, n)
    cos_t = math.sqrt(c / m)
    cos_h = math.sqrt(c / n)
    cos_hut = math.sqrt(4 * c * c / ((n + c) * (m + c)))
    return OverlapMeasures(c=c, m=m, n=n, cos_t=cos_t, cos_h=cos_h, cos_hut=cos_hut)


def ate_decide(meas: OverlapMeasures, thresholds: Thresholds = DEFAULT_THRESHOLDS) -> AteTrace:
    """Evaluate all gates over precomputed measures."""
    length_gate = meas.m >= meas.n >= meas.c
    primary = meas.cos_h >= meas.cos_hut >= meas.cos_t
    condition4 = (meas.cos_hut - meas.cos_t) <= thresholds.tau1
    condition5 = (meas.cos_h - meas.cos_hut) <= thresholds.tau2
    condition6 = max(meas.cos_t, meas.cos_h, meas.cos_hut) >= thresholds.tau3
    passed = length_gate and primary and condition4 and condition5 and condition6
    return AteTrace(
        measures=meas,
        length_gate_passed=length_gate,
        primary_condition_passed=primary,
        condition4_passed=condition4,
        condition5_passed=condition5,
        condition6_passed=condition6,
        decision=Decision.ENTAILS if passed else Decision.NOT_ENTAILS,
    )


def decide_pair(
    text: ProcessedSentence,
    hyp: ProcessedSentence,
    lexicon: SemanticLexicon,
    thresholds: Thresholds = DEFAULT_THRESHOLDS,
) -> AteTrace:
    """Overlap decision for two already-processed sentences."""
    c, m, n = common_count(text, hyp, lexicon)
    if m == 0 or n == 0:
        zero = OverlapMeasures(c=c, m=m, n=n, cos_t=0.0, cos_h=0.0, cos_hut=0.0)
        return replace(ate_decide(zero, thresholds), degenerate_length=True)
    return ate_decide(measures(c, m, n), thresholds)


def judge_ate(
    raw_text: str,
    raw_hyp: str,
    resources: Resources,
    thresholds: Thresholds = DEFAULT_THRESHOLDS,
) -> AteTrace:
    """Full baseline judgment from raw strings: process, count, decide."""
    text = process_sentence(raw_text, resources.stop_words, resources.affixes)
    hyp = process_sentence(raw_hyp, resources.stop_words, resources.affixes)
    return decide_pair(text, hyp, resources.semantic, thresholds)

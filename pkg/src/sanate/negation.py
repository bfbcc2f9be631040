"""Negation resolution over a positive overlap decision.

The five negative particles (ما، لا، لم، لن، ليس) reverse truth, so a
pair that passes the overlap gates is re-checked against the placement
of particles. The negated target is the token immediately following a
particle (no POS tagging; the rules assume the verb sits right after
the particle). Two targets on opposite sides count as the same common
verb when their stems are equal or related in the semantic lexicon.

Rules, applied only when the incoming decision is ENTAILS:

    R1   one common verb negated on exactly one side  -> NOT_ENTAILS
    R2   one common verb negated on both sides        -> ENTAILS
    R3   verbs negated but none of them is common     -> NOT_ENTAILS
    R4a  several common verbs, any one-sided negation -> NOT_ENTAILS
    R4b  several common verbs, all negated both sides -> ENTAILS

A NOT_ENTAILS decision is never re-checked (and never upgraded).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .lexicons import SemanticLexicon
from .normalize import ProcessedSentence
from .overlap import Decision


class NegationRule(str, Enum):
    ONE_SIDED_COMMON = "R1"
    BOTH_SIDES_COMMON = "R2"
    NO_COMMON_TARGET = "R3"
    MULTI_ONE_SIDED = "R4a"
    MULTI_BOTH_SIDES = "R4b"
    NO_PARTICLES = "NoParticles"


#: Rules that veto a positive decision.
_VETO_RULES = frozenset(
    {NegationRule.ONE_SIDED_COMMON, NegationRule.NO_COMMON_TARGET, NegationRule.MULTI_ONE_SIDED}
)


@dataclass(frozen=True)
class NegationAnalysis:
    """Negated targets of both sentences and the rule they select.

    ``common_targets`` holds the negated target stems (from either
    side) that also occur in the other sentence, directly or through a
    lexicon relation.
    """

    text_negated_targets: frozenset[str]
    hyp_negated_targets: frozenset[str]
    common_targets: frozenset[str]
    fired_rule: NegationRule


def _stems_match(a: str, b: str, lexicon: SemanticLexicon) -> bool:
    return a == b or b in lexicon.related(a) or a in lexicon.related(b)


def _occurs_in(stem: str, sentence: ProcessedSentence, lexicon: SemanticLexicon) -> bool:
    return any(
        _stems_match(stem, token.stem, lexicon)
        for token in sentence.all_tokens
        if not token.is_negation_particle
    )


def _component_count(targets: frozenset[str], lexicon: SemanticLexicon) -> int:
    """Number of distinct verb groups among targets, merging related stems."""
    remaining = set(targets)
    components = 0
    while remaining:
        seed = remaining.pop()
        frontier = [seed]
        while frontier:
            current = frontier.pop()
            linked = {s for s in remaining if _stems_match(current, s, lexicon)}
            remaining -= linked
            frontier.extend(linked)
        components += 1
    return components


def analyze_negation(
    text: ProcessedSentence,
    hyp: ProcessedSentence,
    lexicon: SemanticLexicon,
) -> NegationAnalysis:
    """Collect negated targets on both sides and select the applicable rule."""
    text_targets = frozenset(target.stem for _, target in text.negations)
    hyp_targets = frozenset(target.stem for _, target in hyp.negations)

    if not text_targets and not hyp_targets:
        return NegationAnalysis(
            text_negated_targets=text_targets,
            hyp_negated_targets=hyp_targets,
            common_targets=frozenset(),
            fired_rule=NegationRule.NO_PARTICLES,
        )

    common_text = {s for s in text_targets if _occurs_in(s, hyp, lexicon)}
    common_hyp = {s for s in hyp_targets if _occurs_in(s, text, lexicon)}
    common = frozenset(common_text | common_hyp)

    if not common:
        rule = NegationRule.NO_COMMON_TARGET
    else:
        one_sided = any(
            not any(_stems_match(s, other, lexicon) for other in hyp_targets)
            for s in common_text
        ) or any(
            not any(_stems_match(s, other, lexicon) for other in text_targets)
            for s in common_hyp
        )
        multiple = _component_count(common, lexicon) > 1
        if one_sided:
            rule = NegationRule.MULTI_ONE_SIDED if multiple else NegationRule.ONE_SIDED_COMMON
        else:
            rule = NegationRule.MULTI_BOTH_SIDES if multiple else NegationRule.BOTH_SIDES_COMMON

    return NegationAnalysis(
        text_negated_targets=text_targets,
        hyp_negated_targets=hyp_targets,
        common_targets=common,
        fired_rule=rule,
    )


def negation_adjust(ate_decision: Decision, analysis: NegationAnalysis) -> Decision:
    """Apply the selected rule; a NOT_ENTAILS decision passes through unchanged."""
    if ate_decision is Decision.NOT_ENTAILS:
        return ate_decision
    if analysis.fired_rule in _VETO_RULES:
        return Decision.NOT_ENTAILS
    return ate_decision

"""Sentence polarity classification and the polarity-compatibility check.

Polarity is decided by counting opinion-word occurrences against the
positive and negative dictionaries (term frequencies Pos-TF / Neg-TF):

    Positive    Pos-TF >= 2 and Pos-TF > Neg-TF
    Negative    Neg-TF >= 2 and Pos-TF < Neg-TF
    Neutral     Pos-TF == Neg-TF and Pos-TF != 0
    NoOpinion   every remaining case

Counting runs over every token of the sentence (stop words and
particles included): an opinion word must not be lost to stop-word
removal. A pair judged ENTAILS is vetoed when both sentences carry
opinion words and their polarities disagree; opposite feelings do not
entail each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lexicons import Polarity, SentimentLexicon
from .normalize import ProcessedSentence
from .overlap import Decision


@dataclass(frozen=True)
class PolarityResult:
    """Polarity label with the term frequencies and matched words behind it."""

    polarity: Polarity
    pos_tf: int
    neg_tf: int
    opinion_words: tuple[tuple[str, str], ...] = ()

    @property
    def has_opinion_words(self) -> bool:
        return self.pos_tf + self.neg_tf > 0

    def to_dict(self) -> dict:
        return {
            "polarity": self.polarity.value,
            "pos_tf": self.pos_tf,
            "neg_tf": self.neg_tf,
            "opinion_words": [list(pair) for pair in self.opinion_words],
        }


def classify_polarity(
    sentence: ProcessedSentence, lexicon: SentimentLexicon
) -> PolarityResult:
    """Count opinion words over all tokens and apply the polarity rules."""
    pos_tf = 0
    neg_tf = 0
    matched = []
    for token in sentence.all_tokens:
        hit = lexicon.polarity_of(token.normalized, stem=token.stem)
        if hit is Polarity.POSITIVE:
            pos_tf += 1
            matched.append((token.normalized, hit.value))
        elif hit is Polarity.NEGATIVE:
            neg_tf += 1
            matched.append((token.normalized, hit.value))

    if pos_tf >= 2 and pos_tf > neg_tf:
        label = Polarity.POSITIVE
    elif neg_tf >= 2 and pos_tf < neg_tf:
        label = Polarity.NEGATIVE
    elif pos_tf == neg_tf and pos_tf != 0:
        label = Polarity.NEUTRAL
    else:
        label = Polarity.NO_OPINION
    return PolarityResult(
        polarity=label, pos_tf=pos_tf, neg_tf=neg_tf, opinion_words=tuple(matched)
    )


def sentiment_adjust(
    decision: Decision,
    text_polarity: PolarityResult,
    hyp_polarity: PolarityResult,
    promote: bool = False,
) -> Decision:
    """Polarity-compatibility adjustment.

    Applies only when both sentences have opinion words and both carry
    a definite polarity (Positive/Negative/Neutral): equal polarities
    keep the decision, different polarities veto it. By default the
    check never upgrades a NOT_ENTAILS decision; ``promote=True`` is an
    experimental switch that lets equal polarities do so.
    """
    applicable = (
        text_polarity.has_opinion_words
        and hyp_polarity.has_opinion_words
        and text_polarity.polarity is not Polarity.NO_OPINION
        and hyp_polarity.polarity is not Polarity.NO_OPINION
    )
    if not applicable:
        return decision
    if decision is Decision.NOT_ENTAILS and not promote:
        return decision
    if text_polarity.polarity is hyp_polarity.polarity:
        return Decision.ENTAILS
    return Decision.NOT_ENTAILS

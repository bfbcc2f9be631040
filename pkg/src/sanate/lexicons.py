"""Lexical resources: the semantic-relation lexicon and the sentiment dictionaries.

The semantic lexicon is a flat word-relation table standing in for a
full wordnet: any richer source only needs to be exported to the TSV
format below. The sentiment side is a pair of word sets (positive and
negative dictionaries), obtained either by splitting one combined
``word,polarity`` CSV or by loading two one-word-per-line files.

All lexicons are immutable after load and safe to share across threads.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources as importlib_resources
from typing import Iterable, Mapping

from .errors import IoFailure, MalformedLine, MalformedRow, UnknownPolarityLabel
from .normalize import (
    DEFAULT_AFFIXES,
    AffixTables,
    light_stem,
    load_stop_words,
    normalize,
)


class Polarity(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NEUTRAL = "neutral"
    NO_OPINION = "no_opinion"


@dataclass(frozen=True)
class SemanticLexicon:
    """Symmetric word-relation map over normalized stems.

    A word is never stored as related to itself; the identity relation
    is implicit in stem-equality matching.
    """

    entries: Mapping[str, frozenset[str]]

    @classmethod
    def empty(cls) -> "SemanticLexicon":
        return cls(entries={})

    @classmethod
    def from_pairs(
        cls,
        pairs: Iterable[tuple[str, str]],
        affixes: AffixTables = DEFAULT_AFFIXES,
    ) -> "SemanticLexicon":
        """Build a lexicon from (word, related-word) pairs.

        Both sides are normalized and stemmed; the relation is closed
        under symmetry and self-relations are dropped.
        """
        table: dict[str, set[str]] = {}
        for left, right in pairs:
            a = light_stem(normalize(left), affixes)
            b = light_stem(normalize(right), affixes)
            if not a or not b or a == b:
                continue
            table.setdefault(a, set()).add(b)
            table.setdefault(b, set()).add(a)
        return cls(entries={word: frozenset(rel) for word, rel in table.items()})

    def related(self, word: str) -> frozenset[str]:
        """Words related to ``word``; empty for unknown words."""
        return self.entries.get(word, frozenset())


@dataclass(frozen=True)
class SentimentLexicon:
    """Positive and negative opinion-word dictionaries (disjoint sets).

    ``conflicts`` counts words that appeared with both labels in the
    source and were therefore dropped from both sets.
    """

    positive: frozenset[str] = frozenset()
    negative: frozenset[str] = frozenset()
    conflicts: int = 0

    @classmethod
    def empty(cls) -> "SentimentLexicon":
        return cls()

    def polarity_of(self, word: str, stem: str | None = None) -> Polarity | None:
        """Polarity of a normalized word, or None when it carries no opinion.

        The exact normalized form is tried first, then the stem.
        """
        if stem is None:
            stem = light_stem(word)
        if word in self.positive:
            return Polarity.POSITIVE
        if word in self.negative:
            return Polarity.NEGATIVE
        if stem in self.positive:
            return Polarity.POSITIVE
        if stem in self.negative:
            return Polarity.NEGATIVE
        return None


def load_semantic_lexicon(path, affixes: AffixTables = DEFAULT_AFFIXES) -> SemanticLexicon:
    """Load a semantic lexicon from a UTF-8 TSV file.

    Line format: ``headword<TAB>rel1,rel2,...``; ``#`` comments and
    blank lines are ignored. Raises :class:`MalformedLine` with the
    offending line number, :class:`IoFailure` for unreadable files.
    """
    try:
        with open(path, encoding="utf-8") as handle:
            lines = handle.read().splitlines()
    except OSError as exc:
        raise IoFailure(f"cannot read semantic lexicon {path}: {exc}") from exc
    pairs: list[tuple[str, str]] = []
    for number, line in enumerate(lines, start=1):
        entry = line.strip()
        if not entry or entry.startswith("#"):
            continue
        parts = entry.split("\t")
        if len(parts) != 2:
            raise MalformedLine(number, "expected headword<TAB>related,words")
        head, related_field = parts[0].strip(), parts[1].strip()
        related_words = [w.strip() for w in related_field.split(",") if w.strip()]
        if not head or not related_words:
            raise MalformedLine(number, "empty headword or relation list")
        pairs.extend((head, rel) for rel in related_words)
    return SemanticLexicon.from_pairs(pairs, affixes)


def _split_word_sets(
    labelled: Iterable[tuple[str, Polarity]],
) -> SentimentLexicon:
    positive: set[str] = set()
    negative: set[str] = set()
    for word, label in labelled:
        (positive if label is Polarity.POSITIVE else negative).add(word)
    both = positive & negative
    return SentimentLexicon(
        positive=frozenset(positive - both),
        negative=frozenset(negative - both),
        conflicts=len(both),
    )


def split_combined_lexicon(path) -> SentimentLexicon:
    """Split a combined ``word,polarity`` CSV into the two dictionaries.

    Labels are case-insensitive ``positive``/``negative``. Words are
    normalized on load; a word appearing with both labels is dropped
    from both sets and counted in ``conflicts``.
    """
    try:
        with open(path, encoding="utf-8", newline="") as handle:
            rows = list(csv.reader(handle))
    except OSError as exc:
        raise IoFailure(f"cannot read sentiment lexicon {path}: {exc}") from exc
    labelled = []
    for number, row in enumerate(rows, start=1):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != 2:
            raise MalformedRow(number, f"expected 2 columns, got {len(row)}")
        word = normalize(row[0].strip())
        label = row[1].strip().lower()
        if not word:
            raise MalformedRow(number, "empty word")
        if label == "positive":
            labelled.append((word, Polarity.POSITIVE))
        elif label == "negative":
            labelled.append((word, Polarity.NEGATIVE))
        else:
            raise UnknownPolarityLabel(number, row[1].strip())
    return _split_word_sets(labelled)


def load_sentiment_wordlists(positive_path, negative_path) -> SentimentLexicon:
    """Load pre-split dictionaries from two one-word-per-line files."""

    def read_words(path) -> list[str]:
        try:
            with open(path, encoding="utf-8") as handle:
                lines = handle.read().splitlines()
        except OSError as exc:
            raise IoFailure(f"cannot read word list {path}: {exc}") from exc
        words = []
        for line in lines:
            entry = line.strip()
            if entry and not entry.startswith("#"):
                word = normalize(entry)
                if word:
                    words.append(word)
        return words

    labelled = [(w, Polarity.POSITIVE) for w in read_words(positive_path)]
    labelled += [(w, Polarity.NEGATIVE) for w in read_words(negative_path)]
    return _split_word_sets(labelled)


def default_stop_words() -> frozenset[str]:
    """The stop-word list shipped with the package."""
    data = importlib_resources.files("sanate").joinpath("data/stopwords_ar.txt")
    with importlib_resources.as_file(data) as path:
        return load_stop_words(path)


@dataclass(frozen=True)
class Resources:
    """Bundle of loaded resources consumed by the entailment pipeline."""

    stop_words: frozenset[str] = frozenset()
    semantic: SemanticLexicon = field(default_factory=SemanticLexicon.empty)
    sentiment: SentimentLexicon = field(default_factory=SentimentLexicon.empty)
    affixes: AffixTables = DEFAULT_AFFIXES

    @classmethod
    def default(cls) -> "Resources":
        """Packaged stop words, empty lexicons, default affixes."""
        return cls(stop_words=default_stop_words())

    @classmethod
    def from_paths(
        cls,
        stopwords=None,
        semlex=None,
        sentlex=None,
        affixes=None,
    ) -> "Resources":
        """Load resources from file paths; missing paths fall back to defaults."""
        tables = load_affix_tables(affixes) if affixes else DEFAULT_AFFIXES
        return cls(
            stop_words=load_stop_words(stopwords) if stopwords else default_stop_words(),
            semantic=(
                load_semantic_lexicon(semlex, tables) if semlex else SemanticLexicon.empty()
            ),
            sentiment=split_combined_lexicon(sentlex) if sentlex else SentimentLexicon.empty(),
            affixes=tables,
        )

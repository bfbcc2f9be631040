"""Arabic text normalization, tokenization and light stemming.

Turns raw Arabic text into a normalized, tokenized, stemmed sentence with
negation particles flagged and stop words removed.

Normalization rules (deterministic, applied in order):
1. Recompose to Unicode NFC.
2. Remove diacritics (tashkeel, U+064B-U+065F, dagger alif U+0670).
3. Remove tatweel (kashida).
4. Normalize alef variants: [أإآٱ] -> ا
5. Normalize word-final alef maqsura: ى -> ي
6. Normalize ta marbuta: ة -> ه
7. Collapse whitespace runs to single spaces, strip the ends.

Stemming is light (affix stripping, not root extraction): at most one
prefix and one suffix are removed, longest match first, and a word is
never reduced below two characters.

All functions here are pure; inputs and outputs are immutable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from unicodedata import normalize as unicode_normalize

from .errors import IoFailure, MalformedLine

# Tashkeel (fatha, damma, kasra, tanwin, shadda, sukun, ...) plus the
# dagger alif; removed outright.
_DIACRITICS = re.compile(r"[ً-ٰٟ]")

# Tatweel (kashida) is pure text stretching.
_TATWEEL = "ـ"

# أ إ آ ٱ -> ا
_ALEF_VARIANTS = re.compile(r"[آأإٱ]")

# ى -> ي only in word-final position.
_FINAL_ALEF_MAQSURA = re.compile(r"ى(?!\w)")

_WHITESPACE = re.compile(r"\s+")

# Word characters; everything else (punctuation, Arabic or Latin) splits
# tokens and is discarded.
_TOKEN = re.compile(r"\w+")

#: The five negative particles. They are never removed as stop words:
#: they are kept (flagged) in ``all_tokens`` and excluded from
#: ``content_tokens`` by their own rule.
NEGATION_PARTICLES = frozenset({"ما", "لا", "لم", "لن", "ليس"})

#: Default affix tables for the light stemmer.
DEFAULT_PREFIXES = ("وال", "بال", "كال", "فال", "ال", "لل", "و")
DEFAULT_SUFFIXES = ("ها", "ان", "ات", "ون", "ين", "يه", "ية", "ه", "ي", "ة")

#: Stripping never leaves fewer than this many characters.
MIN_STEM_LENGTH = 2


@dataclass(frozen=True)
class AffixTables:
    """Prefix/suffix tables used by :func:`light_stem`, longest first."""

    prefixes: tuple[str, ...] = DEFAULT_PREFIXES
    suffixes: tuple[str, ...] = DEFAULT_SUFFIXES

    def __post_init__(self):
        ordered_p = tuple(sorted(self.prefixes, key=len, reverse=True))
        ordered_s = tuple(sorted(self.suffixes, key=len, reverse=True))
        object.__setattr__(self, "prefixes", ordered_p)
        object.__setattr__(self, "suffixes", ordered_s)


DEFAULT_AFFIXES = AffixTables()


@dataclass(frozen=True)
class Token:
    """One token of a processed sentence.

    ``position`` is the zero-based index in the original token sequence.
    ``is_negation_particle`` and ``is_stop_word`` are mutually exclusive:
    particles are never marked as stop words.
    """

    surface: str
    normalized: str
    stem: str
    position: int
    is_negation_particle: bool = False
    is_stop_word: bool = False


@dataclass(frozen=True)
class ProcessedSentence:
    """A sentence after normalization, tokenization and filtering.

    ``all_tokens`` holds every token; ``content_tokens`` excludes stop
    words and negation particles. ``negations`` pairs each particle with
    the token at the immediately following position in ``all_tokens``
    (a sentence-final particle produces no entry).
    """

    raw: str
    all_tokens: tuple[Token, ...]
    content_tokens: tuple[Token, ...]
    negations: tuple[tuple[Token, Token], ...] = ()


def normalize(raw: str) -> str:
    """Normalize Arabic text. Idempotent; empty input yields empty output.

    >>> normalize("أنا")
    'انا'
    """
    text = unicode_normalize("NFC", raw)
    text = _DIACRITICS.sub("", text)
    text = text.replace(_TATWEEL, "")
    text = _ALEF_VARIANTS.sub("ا", text)
    text = _FINAL_ALEF_MAQSURA.sub("ي", text)
    text = text.replace("ة", "ه")  # ة -> ه
    text = _WHITESPACE.sub(" ", text).strip()
    return text


def light_stem(word: str, affixes: AffixTables = DEFAULT_AFFIXES) -> str:
    """Strip at most one prefix and one suffix from a normalized word.

    Longest affix first; an affix is skipped when stripping it would
    leave fewer than two characters.

    >>> light_stem("الكتب")
    'كتب'
    """
    stem = word
    for prefix in affixes.prefixes:
        if stem.startswith(prefix) and len(stem) - len(prefix) >= MIN_STEM_LENGTH:
            stem = stem[len(prefix):]
            break
    for suffix in affixes.suffixes:
        if stem.endswith(suffix) and len(stem) - len(suffix) >= MIN_STEM_LENGTH:
            stem = stem[: -len(suffix)]
            break
    return stem


def tokenize(
    normalized: str,
    stop_words: frozenset[str] = frozenset(),
    affixes: AffixTables = DEFAULT_AFFIXES,
) -> tuple[Token, ...]:
    """Split normalized text into tokens, discarding punctuation.

    Positions are assigned in order of appearance. A token is marked as
    a stop word when its normalized form or its stem is in
    ``stop_words`` -- unless it is a negation particle, which is flagged
    separately and never stop-marked.
    """
    tokens = []
    for position, chunk in enumerate(_TOKEN.findall(normalized)):
        stem = light_stem(chunk, affixes)
        is_particle = chunk in NEGATION_PARTICLES
        is_stop = not is_particle and (chunk in stop_words or stem in stop_words)
        tokens.append(
            Token(
                surface=chunk,
                normalized=chunk,
                stem=stem,
                position=position,
                is_negation_particle=is_particle,
                is_stop_word=is_stop,
            )
        )
    return tuple(tokens)


def process_sentence(
    raw: str,
    stop_words: frozenset[str] = frozenset(),
    affixes: AffixTables = DEFAULT_AFFIXES,
) -> ProcessedSentence:
    """Normalize, tokenize and filter a raw sentence.

    Content tokens exclude stop words and negation particles; the
    particles stay visible in ``all_tokens`` so that negation can be
    resolved after the overlap decision.
    """
    all_tokens = tokenize(normalize(raw), stop_words, affixes)
    content = tuple(
        t for t in all_tokens if not t.is_stop_word and not t.is_negation_particle
    )
    negations = tuple(
        (tok, all_tokens[i + 1])
        for i, tok in enumerate(all_tokens)
        if tok.is_negation_particle and i + 1 < len(all_tokens)
    )
    return ProcessedSentence(
        raw=raw, all_tokens=all_tokens, content_tokens=content, negations=negations
    )


def load_stop_words(path) -> frozenset[str]:
    """Load a stop-word file: UTF-8, one word per line, ``#`` comments.

    Entries are normalized on load, so the file may use any alef/ya/ta
    spelling variant.
    """
    try:
        with open(path, encoding="utf-8") as handle:
            lines = handle.read().splitlines()
    except OSError as exc:
        raise IoFailure(f"cannot read stop-word file {path}: {exc}") from exc
    words = set()
    for line in lines:
        entry = line.strip()
        if not entry or entry.startswith("#"):
            continue
        normalized = normalize(entry)
        if normalized:
            words.add(normalized)
    return frozenset(words)


def load_affix_tables(path) -> AffixTables:
    """Load affix tables from a config file.

    Format: ``[prefixes]`` / ``[suffixes]`` section headers, one affix
    per line, ``#`` comments ignored. Affixes are normalized on load.
    """
    try:
        with open(path, encoding="utf-8") as handle:
            lines = handle.read().splitlines()
    except OSError as exc:
        raise IoFailure(f"cannot read affix file {path}: {exc}") from exc
    sections: dict[str, list[str]] = {"prefixes": [], "suffixes": []}
    current: list[str] | None = None
    for number, line in enumerate(lines, start=1):
        entry = line.strip()
        if not entry or entry.startswith("#"):
            continue
        if entry.startswith("[") and entry.endswith("]"):
            name = entry[1:-1].strip().lower()
            if name not in sections:
                raise MalformedLine(number, f"unknown section {name!r}")
            current = sections[name]
            continue
        if current is None:
            raise MalformedLine(number, "affix outside of a section")
        normalized = normalize(entry)
        if normalized:
            current.append(normalized)
    return AffixTables(
        prefixes=tuple(sections["prefixes"]), suffixes=tuple(sections["suffixes"])
    )

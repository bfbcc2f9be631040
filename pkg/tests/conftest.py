from pathlib import Path

import pytest

from sanate import (
    Resources,
    load_dataset,
    load_semantic_lexicon,
    load_stop_words,
    split_combined_lexicon,
)

GOLDEN_DIR = Path(__file__).parent / "fixtures" / "golden"


@pytest.fixture(scope="session")
def golden_dir() -> Path:
    return GOLDEN_DIR


@pytest.fixture(scope="session")
def golden_resources() -> Resources:
    return Resources(
        stop_words=load_stop_words(GOLDEN_DIR / "stopwords.txt"),
        semantic=load_semantic_lexicon(GOLDEN_DIR / "semantic_lexicon.tsv"),
        sentiment=split_combined_lexicon(GOLDEN_DIR / "sentiment_combined.csv"),
    )


@pytest.fixture(scope="session")
def golden_records():
    return load_dataset(GOLDEN_DIR / "golden_pairs.jsonl")

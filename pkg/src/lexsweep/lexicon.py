"""Word-key normalization and lexicon construction.

Tokens are reduced to normalized word keys (lemma or surface, optionally
case-folded), restricted to content POS tags, and filtered against a
stopword list.  From those keys we build the full vocabulary (the
universe), the gold vocabulary (keys seen in annotated sentences), and
the frequency index the extraction measures consume.
"""

from __future__ import annotations

import os
import warnings
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import IO, Union

from .corpus import Corpus, CorpusWarning, Token

# A lexicon is just a set of normalized word keys.
Lexicon = frozenset[str]

DEFAULT_CONTENT_POS = frozenset({"VERB", "NOUN"})


class WordKeySource(Enum):
    """Which token field becomes the word key."""

    LEMMA_THEN_SURFACE = "lemma"
    SURFACE_ONLY = "surface"


@dataclass(frozen=True)
class FilterConfig:
    """Stopword list, content POS tags, and key-normalization options."""

    stopwords: frozenset[str] = frozenset()
    content_pos: frozenset[str] = DEFAULT_CONTENT_POS
    word_key_source: WordKeySource = WordKeySource.LEMMA_THEN_SURFACE
    case_fold: bool = True

    def __post_init__(self) -> None:
        if not self.content_pos:
            raise ValueError("content_pos must not be empty")


@dataclass(frozen=True)
class CorpusIndex:
    """Per-word frequencies computed over content, non-stopword tokens.

    collection_freq counts tokens corpus-wide; per_document holds one
    word->count table per document (empty documents included, so the
    key set equals the corpus document ids); doc_counts is the number
    of documents each word occurs in.
    """

    collection_freq: dict[str, int]
    per_document: dict[str, dict[str, int]]
    doc_counts: dict[str, int]
    n_documents: int

    @cached_property
    def words(self) -> Lexicon:
        return frozenset(self.collection_freq)

    @cached_property
    def max_doc_count(self) -> int:
        """Largest number of documents any single word occurs in (0 if empty)."""
        return max(self.doc_counts.values(), default=0)


def normalize(token: Token, config: FilterConfig) -> str | None:
    """Return the token's normalized word key, or None if filtered out.

    Non-content POS tags and stopwords are filtered; the stopword check
    runs on the normalized key.
    """
    if token.pos not in config.content_pos:
        return None
    if config.word_key_source is WordKeySource.LEMMA_THEN_SURFACE and token.lemma:
        key = token.lemma.strip()
    else:
        key = token.surface.strip()
    if config.case_fold:
        key = key.casefold()
    if key in config.stopwords:
        return None
    return key


def build_universe(corpus: Corpus, config: FilterConfig) -> Lexicon:
    """All distinct content word keys across the corpus, annotated or not."""
    words = set()
    for _, sentence in corpus.sentences():
        for token in sentence.tokens:
            key = normalize(token, config)
            if key is not None:
                words.add(key)
    return frozenset(words)


def build_gold(corpus: Corpus, config: FilterConfig) -> Lexicon:
    """Distinct content word keys occurring in annotated sentences.

    By construction a subset of build_universe's result.  Warns when the
    result is empty (no annotated sentences, or all their tokens filtered).
    """
    words = set()
    for _, sentence in corpus.sentences():
        if not sentence.annotated:
            continue
        for token in sentence.tokens:
            key = normalize(token, config)
            if key is not None:
                words.add(key)
    if not words:
        warnings.warn("gold lexicon is empty: no annotated content words", CorpusWarning)
    return frozenset(words)


def build_index(corpus: Corpus, config: FilterConfig) -> CorpusIndex:
    """Single pass over the corpus collecting all per-word frequencies."""
    collection: Counter[str] = Counter()
    per_document: dict[str, dict[str, int]] = {}
    doc_counts: Counter[str] = Counter()

    for document in corpus.documents:
        doc_freq: Counter[str] = Counter()
        for sentence in document.sentences:
            for token in sentence.tokens:
                key = normalize(token, config)
                if key is not None:
                    doc_freq[key] += 1
        collection.update(doc_freq)
        doc_counts.update(doc_freq.keys())
        per_document[document.id] = dict(doc_freq)

    return CorpusIndex(
        collection_freq=dict(collection),
        per_document=per_document,
        doc_counts=dict(doc_counts),
        n_documents=len(corpus.documents),
    )


def load_stopwords(source: Union[str, "os.PathLike[str]", IO[str]]) -> frozenset[str]:
    """Read a stopword file: one word per line, '#' lines are comments.

    Entries are expected to already be in normalized form (the filter
    matches them against normalized keys).
    """
    if hasattr(source, "read"):
        text = source.read()
    else:
        with open(source, "r", encoding="utf-8") as handle:
            text = handle.read()
    words = set()
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        words.add(line)
    return frozenset(words)


def format_lexicon(words: Lexicon) -> str:
    """Render a lexicon as text: one word per line, sorted lexicographically."""
    return "".join(f"{word}\n" for word in sorted(words))

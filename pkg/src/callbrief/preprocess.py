"""Transcript ingestion: bracket filtering, segmentation, tokenization,
stopword removal and stemming into an immutable document.

Transcripts are plain UTF-8 text, one file per conversation, typically one
utterance per line. Preprocessing keeps sentence indices aligned with the
transcript: sentences whose token list empties out are retained with an
empty token tuple so downstream selection can still address them by index.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ConfigError
from .stemming import get_stemmer

_OPEN = "([{"
_CLOSE = ")]}"
_MATCHING_OPEN = {")": "(", "]": "[", "}": "{"}

_SENTENCE_DELIMS = re.compile(r"[.!?\n\r]")


def strip_brackets(text: str) -> str:
    """Remove bracketed spans (annotations like "(rire)" or "[bruit]").

    A closing bracket removes everything back to the most recent opener of
    the same type, brackets included; openers of other types caught inside
    that span vanish with it. Brackets that never find a partner are
    dropped as lone characters, leaving their neighbours intact.
    """
    stack: list[tuple[str, str]] = []  # (opener, text accumulated before it)
    out: list[str] = []
    for ch in text:
        if ch in _OPEN:
            stack.append((ch, "".join(out)))
            out = []
        elif ch in _CLOSE:
            opener = _MATCHING_OPEN[ch]
            for k in range(len(stack) - 1, -1, -1):
                if stack[k][0] == opener:
                    out = [stack[k][1]]
                    del stack[k:]
                    break
            # no same-type opener: stray closer, dropped
        else:
            out.append(ch)
    # leftover openers are stray: drop the bracket, keep the text after it
    return "".join(buf for _, buf in stack) + "".join(out)


def segment_sentences(text: str) -> list[str]:
    """Split bracket-stripped text into sentence strings.

    Splits on newlines and on terminal punctuation (. ! ?); empty and
    whitespace-only segments are discarded and the survivors trimmed.
    """
    segments = _SENTENCE_DELIMS.split(text)
    return [seg.strip() for seg in segments if seg.strip()]


def tokenize(sentence: str) -> list[str]:
    """Lowercase and split a sentence into word tokens.

    Splits on whitespace, strips leading/trailing punctuation from each
    chunk (word-internal apostrophes and hyphens survive), then splits
    elisions at the apostrophe keeping both parts: "l'agent" becomes
    "l'", "agent". Typographic apostrophes are treated like ASCII ones.
    """
    tokens: list[str] = []
    for chunk in sentence.lower().replace("’", "'").split():
        start, end = 0, len(chunk)
        while start < end and not chunk[start].isalnum():
            start += 1
        while end > start and not chunk[end - 1].isalnum():
            end -= 1
        chunk = chunk[start:end]
        if not chunk:
            continue
        if "'" in chunk:
            parts = chunk.split("'")
            for part in parts[:-1]:
                if part:
                    tokens.append(part + "'")
            if parts[-1]:
                tokens.append(parts[-1])
        else:
            tokens.append(chunk)
    return tokens


@dataclass(frozen=True)
class StopwordList:
    """Lowercase stopword set with the language tag it was built for."""

    words: frozenset[str]
    language_tag: str = "french"

    @classmethod
    def from_words(cls, words, language_tag: str = "french") -> "StopwordList":
        return cls(frozenset(w.lower() for w in words), language_tag)

    def __contains__(self, token: str) -> bool:
        return token in self.words


def load_stopwords(path: str | Path, language_tag: str = "french") -> StopwordList:
    """Read a stopword file: one word per line, '#' lines and blanks ignored."""
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"stopword file not found: {path}")
    words = []
    for line in path.read_text(encoding="utf-8").splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        words.append(line.strip().lower())
    return StopwordList.from_words(words, language_tag)


def remove_stopwords(tokens: list[str], stopwords: StopwordList) -> list[str]:
    """Drop stopword tokens, preserving order."""
    return [t for t in tokens if t not in stopwords]


@dataclass(frozen=True)
class RawTranscript:
    """One conversation transcript as read from disk."""

    id: str
    text: str

    def __post_init__(self):
        if not self.id:
            raise ValueError("transcript id must be non-empty")


@dataclass(frozen=True)
class Sentence:
    """A segmented sentence: surface string plus preprocessed tokens.

    ``word_count`` counts the raw word tokens of the surface string
    (before stopword removal); it is the unit the summary budget is
    measured in.
    """

    index: int
    raw_text: str
    tokens: tuple[str, ...]
    word_count: int

    @property
    def term_set(self) -> frozenset[str]:
        return frozenset(self.tokens)


@dataclass(frozen=True)
class TranscriptDocument:
    """Ordered sentences of one conversation plus the raw word total."""

    id: str
    sentences: tuple[Sentence, ...]
    total_words: int

    def __len__(self) -> int:
        return len(self.sentences)


def count_words(text: str) -> int:
    """Raw word-token count of a text (pre-stopword-removal tokenization)."""
    return len(tokenize(text))


def preprocess_document(raw: RawTranscript, stopwords: StopwordList,
                        language_tag: str = "french") -> TranscriptDocument:
    """Run the full preprocessing pipeline over one transcript.

    Stages: strip_brackets, segment_sentences, then per sentence
    tokenize, remove_stopwords and stem. ``total_words`` counts raw word
    tokens after bracket stripping but before stopword removal.
    """
    stemmer = get_stemmer(language_tag)
    stripped = strip_brackets(raw.text)
    sentences = []
    total_words = 0
    for idx, raw_sentence in enumerate(segment_sentences(stripped)):
        raw_tokens = tokenize(raw_sentence)
        total_words += len(raw_tokens)
        kept = remove_stopwords(raw_tokens, stopwords)
        sentences.append(Sentence(
            index=idx,
            raw_text=raw_sentence,
            tokens=tuple(stemmer(t) for t in kept),
            word_count=len(raw_tokens),
        ))
    return TranscriptDocument(id=raw.id, sentences=tuple(sentences),
                              total_words=total_words)

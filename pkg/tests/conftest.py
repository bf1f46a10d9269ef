"""Shared fixtures: hand-built documents used across the test modules."""

from pathlib import Path

import pytest

from callbrief.preprocess import Sentence, TranscriptDocument


def make_doc(token_rows, word_counts=None, raw_texts=None, doc_id="doc",
             total_words=None):
    """Build a document directly from token lists, bypassing text
    preprocessing, so tests control every field."""
    sentences = []
    for i, tokens in enumerate(token_rows):
        words = word_counts[i] if word_counts else max(len(tokens), 1)
        raw = raw_texts[i] if raw_texts else " ".join(tokens) or f"<s{i}>"
        sentences.append(Sentence(index=i, raw_text=raw,
                                  tokens=tuple(tokens), word_count=words))
    if total_words is None:
        total_words = sum(s.word_count for s in sentences)
    return TranscriptDocument(id=doc_id, sentences=tuple(sentences),
                              total_words=total_words)


# five sentences, two topical clusters plus one outlier; used by the
# divergence/graph oracle checks
TOY_TOKEN_ROWS = [
    ["billet", "paris", "train"],
    ["billet", "paris", "gare"],
    ["remboursement", "dossier"],
    ["remboursement", "dossier", "billet"],
    ["horaire", "train", "gare", "paris"],
]


@pytest.fixture
def toy_doc():
    return make_doc([list(r) for r in TOY_TOKEN_ROWS], doc_id="toy")


@pytest.fixture
def corpus_dir():
    path = Path(__file__).resolve().parent.parent / "corpus" / "synthetic"
    if not path.is_dir():
        pytest.skip("bundled synthetic corpus not present")
    return path

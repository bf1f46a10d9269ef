"""Sentence-by-term frequency matrix, TF-ISF weighting and per-sentence
word-probability distributions.

Each conversation is modelled on its own: "sentence frequency" counts
sentences within the document, never documents within a corpus. Sentences
whose token list is empty get an all-zero row; they score 0 everywhere and
never enter the similarity graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

import numpy as np

from .errors import EmptyDistributionError, EmptyDocumentError, UnknownTermError
from .preprocess import TranscriptDocument

AGGREGATIONS = ("mean", "sum")


@dataclass(frozen=True, eq=False)
class TermMatrix:
    """Term-frequency matrix: rows are sentences, columns distinct terms.

    ``vocab`` lists terms in first-occurrence order; ``rows[i, j]`` is the
    count of term j in sentence i.
    """

    vocab: tuple[str, ...]
    rows: np.ndarray

    def __post_init__(self):
        self.rows.setflags(write=False)
        object.__setattr__(self, "_index",
                           {term: j for j, term in enumerate(self.vocab)})

    @property
    def sentence_count(self) -> int:
        return self.rows.shape[0]

    @property
    def vocab_size(self) -> int:
        return self.rows.shape[1]

    @property
    def index(self) -> Mapping[str, int]:
        return MappingProxyType(self._index)

    def term_index(self, term: str) -> int:
        try:
            return self._index[term]
        except KeyError:
            raise UnknownTermError(f"term not in vocabulary: {term!r}") from None

    def row_total(self, i: int) -> int:
        return int(self.rows[i].sum())


def build_matrix(doc: TranscriptDocument) -> TermMatrix:
    """Count term frequencies per sentence over the whole document."""
    vocab: list[str] = []
    index: dict[str, int] = {}
    for sentence in doc.sentences:
        for token in sentence.tokens:
            if token not in index:
                index[token] = len(vocab)
                vocab.append(token)
    if not vocab:
        raise EmptyDocumentError(
            f"document {doc.id!r} has no sentence with tokens")
    rows = np.zeros((len(doc.sentences), len(vocab)), dtype=np.int64)
    for i, sentence in enumerate(doc.sentences):
        for token in sentence.tokens:
            rows[i, index[token]] += 1
    return TermMatrix(vocab=tuple(vocab), rows=rows)


@dataclass(frozen=True)
class TfIsfWeights:
    """TF-ISF values per term plus aggregated per-sentence scores."""

    per_term: Mapping[str, float]
    per_sentence: Mapping[int, float]
    aggregation: str = "mean"


def tf_isf_term(matrix: TermMatrix, term: str) -> float:
    """Weight of one term: total frequency times log inverse sentence frequency.

    tf is the term's count summed over all sentences, the log ratio divides
    the number of non-empty sentences by the number of sentences containing
    the term (natural log). A term present in every sentence scores 0.
    """
    j = matrix.term_index(term)
    column = matrix.rows[:, j]
    tf = int(column.sum())
    n = int((matrix.rows.sum(axis=1) > 0).sum())
    n_w = int((column > 0).sum())
    return tf * math.log(n / n_w)


def compute_tf_isf(matrix: TermMatrix, aggregation: str = "mean") -> TfIsfWeights:
    """Evaluate TF-ISF for the whole vocabulary and every sentence."""
    if aggregation not in AGGREGATIONS:
        raise ValueError(f"aggregation must be one of {AGGREGATIONS}")
    totals = matrix.rows.sum(axis=1)
    n = int((totals > 0).sum())
    doc_freq = (matrix.rows > 0).sum(axis=0)
    tf = matrix.rows.sum(axis=0)
    values = tf * np.log(n / doc_freq)
    per_term = {term: float(values[j]) for j, term in enumerate(matrix.vocab)}
    weights = TfIsfWeights(per_term=per_term, per_sentence={},
                           aggregation=aggregation)
    per_sentence = {i: tf_isf_sentence(matrix, weights, i)
                    for i in range(matrix.sentence_count)}
    return TfIsfWeights(per_term=per_term, per_sentence=per_sentence,
                        aggregation=aggregation)


def tf_isf_sentence(matrix: TermMatrix, weights: TfIsfWeights, i: int) -> float:
    """Aggregate TF-ISF over the distinct terms of sentence i.

    Mean by default (sum if the weights were built that way); empty-token
    sentences score 0.
    """
    if not 0 <= i < matrix.sentence_count:
        raise IndexError(f"sentence index out of range: {i}")
    present = np.flatnonzero(matrix.rows[i])
    if present.size == 0:
        return 0.0
    values = [weights.per_term[matrix.vocab[j]] for j in present]
    if weights.aggregation == "sum":
        return float(sum(values))
    return float(sum(values) / len(values))


@dataclass(frozen=True)
class ProbDist:
    """Raw word-probability distribution of one sentence.

    ``probs`` maps each present term to count/token_total; smoothing over a
    comparison partner's vocabulary happens in the divergence module.
    """

    probs: Mapping[str, float]
    token_total: int

    def __post_init__(self):
        if self.probs and self.token_total > 0:
            total = sum(self.probs.values())
            if abs(total - 1.0) > 1e-9:
                raise ValueError(f"probabilities sum to {total}, expected 1")
            if min(self.probs.values()) <= 0:
                raise ValueError("probabilities must be positive")

    @property
    def support(self):
        return self.probs.keys()

    def __len__(self) -> int:
        return len(self.probs)


def sentence_distribution(matrix: TermMatrix, i: int) -> ProbDist:
    """Normalized term distribution of sentence i (present terms only)."""
    if not 0 <= i < matrix.sentence_count:
        raise IndexError(f"sentence index out of range: {i}")
    row = matrix.rows[i]
    total = int(row.sum())
    if total == 0:
        raise EmptyDistributionError(f"sentence {i} has no tokens")
    probs = {matrix.vocab[j]: row[j] / total for j in np.flatnonzero(row)}
    return ProbDist(probs=probs, token_total=total)

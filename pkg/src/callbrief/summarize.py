"""Greedy budgeted sentence selection and the end-to-end summarizer.

Candidates are visited in descending relevance order (ties toward the
lower sentence index). A candidate is accepted when it is not redundant
against anything already accepted (Dice below the cutoff) and still fits
the word budget; rejected candidates are skipped, not terminal. The
accepted sentences are emitted in transcript order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .divergence import SmoothingParams, dice_coefficient
from .errors import EmptyDocumentError
from .graph import RelevanceScores, SimilarityGraph, build_graph, \
    prune_by_tfisf, score_relevance
from .preprocess import RawTranscript, StopwordList, TranscriptDocument, \
    preprocess_document
from .term_model import AGGREGATIONS, TermMatrix, TfIsfWeights, build_matrix, \
    compute_tf_isf


@dataclass(frozen=True)
class SummarizerConfig:
    """All pipeline knobs, validated on construction.

    ratio is the word-budget fraction of the transcript length (0.07 =
    7%); threshold the graph edge cut on the divergence; keep_fraction the
    TF-ISF pruning survival rate; dice_cutoff the redundancy bound.
    """

    ratio: float = 0.07
    threshold: float = 0.16
    keep_fraction: float = 0.8
    dice_cutoff: float = 0.5
    gamma: float = 0.005
    beta_factor: float = 1.5
    aggregation: str = "mean"
    language_tag: str = "french"

    def __post_init__(self):
        if not 0 < self.ratio <= 1:
            raise ValueError("ratio must be in (0, 1]")
        if self.threshold <= 0:
            raise ValueError("threshold must be positive")
        if not 0 < self.keep_fraction <= 1:
            raise ValueError("keep_fraction must be in (0, 1]")
        if not 0 <= self.dice_cutoff <= 1:
            raise ValueError("dice_cutoff must be in [0, 1]")
        if self.gamma <= 0:
            raise ValueError("gamma must be positive")
        if self.beta_factor <= 0:
            raise ValueError("beta_factor must be positive")
        if self.aggregation not in AGGREGATIONS:
            raise ValueError(f"aggregation must be one of {AGGREGATIONS}")

    @property
    def smoothing(self) -> SmoothingParams:
        return SmoothingParams(gamma=self.gamma, beta_factor=self.beta_factor)


@dataclass(frozen=True)
class Summary:
    """An extractive summary: selected sentence indices in transcript order.

    ``word_count`` counts raw word tokens of the current text;
    ``selection_word_count`` preserves the count measured at selection
    time, before any post-processing shrank the text.
    """

    document_id: str
    selected: tuple[int, ...]
    text: str
    word_count: int
    budget: int
    selection_word_count: int
    scores: Mapping[int, float] | None = None
    warnings: tuple[str, ...] = ()

    def __post_init__(self):
        if any(b <= a for a, b in zip(self.selected, self.selected[1:])):
            raise ValueError("selected indices must be strictly increasing")

    @property
    def sentence_texts(self) -> tuple[str, ...]:
        # sentences never contain newlines (segmentation splits on them)
        return tuple(self.text.split("\n")) if self.text else ()


def word_budget(doc: TranscriptDocument, ratio: float) -> int:
    """Word budget for one document: floor(ratio * total words), at least 1."""
    if not 0 < ratio <= 1:
        raise ValueError("ratio must be in (0, 1]")
    return max(1, math.floor(ratio * doc.total_words))


def select_sentences(scores: RelevanceScores, doc: TranscriptDocument,
                     budget: int, dice_cutoff: float) -> Summary:
    """Greedy selection of high-relevance, non-redundant sentences.

    If nothing fits the budget, the single highest-relevance sentence is
    taken anyway so the summary is never empty.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    if not scores.per_vertex:
        raise EmptyDocumentError("no scored sentences to select from")

    order = sorted(scores.per_vertex, key=lambda i: (-scores.per_vertex[i], i))
    sentences = {s.index: s for s in doc.sentences}
    accepted: list[int] = []
    used = 0
    for cand in order:
        if scores.per_vertex[cand] <= 0.0:
            break  # zero relevance = isolated or contentless, not summary material
        sentence = sentences[cand]
        if any(dice_coefficient(sentence.term_set, sentences[a].term_set)
               >= dice_cutoff for a in accepted):
            continue
        if used + sentence.word_count > budget:
            continue
        accepted.append(cand)
        used += sentence.word_count
    if not accepted:
        accepted = [order[0]]
        used = sentences[order[0]].word_count

    accepted.sort()
    text = "\n".join(sentences[i].raw_text for i in accepted)
    return Summary(
        document_id=doc.id,
        selected=tuple(accepted),
        text=text,
        word_count=used,
        budget=budget,
        selection_word_count=used,
        scores={i: scores.per_vertex[i] for i in accepted},
    )


@dataclass(frozen=True, eq=False)
class PipelineStages:
    """Intermediate products of one summarization run."""

    matrix: TermMatrix
    weights: TfIsfWeights
    survivors: tuple[int, ...]
    graph: SimilarityGraph
    scores: RelevanceScores
    summary: Summary


def summarize(raw: RawTranscript, config: SummarizerConfig,
              stopwords: StopwordList) -> Summary:
    """Full pipeline: preprocess, weight, prune, graph, score, select."""
    doc = preprocess_document(raw, stopwords, config.language_tag)
    return summarize_document(doc, config)


def run_stages(doc: TranscriptDocument,
               config: SummarizerConfig) -> PipelineStages:
    """Summarize an already-preprocessed document, keeping intermediates."""
    matrix = build_matrix(doc)
    weights = compute_tf_isf(matrix, config.aggregation)
    survivors = prune_by_tfisf(doc, weights, config.keep_fraction)
    graph = build_graph(survivors, matrix, config.smoothing, config.threshold)
    scores = score_relevance(graph, matrix, weights)
    budget = word_budget(doc, config.ratio)
    summary = select_sentences(scores, doc, budget, config.dice_cutoff)
    return PipelineStages(matrix=matrix, weights=weights,
                          survivors=tuple(survivors), graph=graph,
                          scores=scores, summary=summary)


def summarize_document(doc: TranscriptDocument,
                       config: SummarizerConfig) -> Summary:
    """Summarize an already-preprocessed document."""
    return run_stages(doc, config).summary


def summary_record(summary: Summary) -> dict:
    """Machine-readable record of a summary for line-delimited output."""
    record = {
        "document_id": summary.document_id,
        "indices": list(summary.selected),
        "word_count": summary.word_count,
        "selection_word_count": summary.selection_word_count,
        "budget": summary.budget,
    }
    if summary.warnings:
        record["warnings"] = list(summary.warnings)
    return record

"""Recall-oriented n-gram scoring of candidate summaries against reference
summaries, plus the two baseline summarizers used for comparison runs.

Scores are pure recall with clipped counts, micro-averaged over multiple
references (pooled gram counts). ROUGE-SU scores the union of unigrams and
skip-bigrams whose gap is at most ``max_skip`` tokens. Evaluation
tokenization is the pipeline tokenizer (lowercase, punctuation stripped);
stemming is off by default, mirroring a recall-focused evaluation setup.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import EmptyDocumentError, UndefinedScoreError
from .preprocess import TranscriptDocument, tokenize
from .stemming import get_stemmer
from .summarize import Summary


@dataclass(frozen=True)
class NGramBag:
    """Multiset of the contiguous n-grams of a token list."""

    n: int
    counts: Counter

    def total(self) -> int:
        return sum(self.counts.values())


def ngram_bag(tokens: Sequence[str], n: int) -> NGramBag:
    """All contiguous n-grams with multiplicity; shorter inputs give an
    empty bag."""
    if n < 1:
        raise ValueError("n must be at least 1")
    counts = Counter(tuple(tokens[i:i + n])
                     for i in range(len(tokens) - n + 1))
    return NGramBag(n=n, counts=counts)


def _clipped_recall(candidate: Counter, references: list[Counter]) -> float:
    total = sum(sum(ref.values()) for ref in references)
    if total == 0:
        raise UndefinedScoreError("references contribute no grams")
    matched = sum(min(candidate[g], c) for ref in references
                  for g, c in ref.items())
    return matched / total


def rouge_n(candidate: Sequence[str], references: Sequence[Sequence[str]],
            n: int) -> float:
    """Clipped n-gram recall, micro-averaged over the references."""
    ref_bags = [ngram_bag(ref, n).counts for ref in references]
    try:
        return _clipped_recall(ngram_bag(candidate, n).counts, ref_bags)
    except UndefinedScoreError:
        raise UndefinedScoreError(
            f"all references shorter than n={n}") from None


def _su_bag(tokens: Sequence[str], max_skip: int) -> Counter:
    counts = Counter((t,) for t in tokens)
    for i in range(len(tokens)):
        for j in range(i + 1, min(i + 2 + max_skip, len(tokens))):
            counts[(tokens[i], tokens[j])] += 1
    return counts


def rouge_su(candidate: Sequence[str], references: Sequence[Sequence[str]],
             max_skip: int) -> float:
    """Clipped recall over unigrams plus gap-limited skip-bigrams."""
    if max_skip < 0:
        raise ValueError("max_skip must be non-negative")
    ref_bags = [_su_bag(ref, max_skip) for ref in references]
    try:
        return _clipped_recall(_su_bag(candidate, max_skip), ref_bags)
    except UndefinedScoreError:
        raise UndefinedScoreError("references are empty") from None


def _summary_from_indices(doc: TranscriptDocument, indices: list[int],
                          budget: int) -> Summary:
    indices = sorted(indices)
    sentences = {s.index: s for s in doc.sentences}
    text = "\n".join(sentences[i].raw_text for i in indices)
    words = sum(sentences[i].word_count for i in indices)
    return Summary(document_id=doc.id, selected=tuple(indices), text=text,
                   word_count=words, budget=budget,
                   selection_word_count=words)


def _require_content(doc: TranscriptDocument) -> None:
    if not doc.sentences or doc.total_words == 0:
        raise EmptyDocumentError(f"document {doc.id!r} has no words")


def baseline_lead(doc: TranscriptDocument, budget: int) -> Summary:
    """Opening sentences until the next one would exceed the budget."""
    if budget < 1:
        raise ValueError("budget must be at least 1")
    _require_content(doc)
    chosen: list[int] = []
    used = 0
    for sentence in doc.sentences:
        if used + sentence.word_count > budget:
            break
        chosen.append(sentence.index)
        used += sentence.word_count
    if not chosen:
        chosen = [doc.sentences[0].index]
    return _summary_from_indices(doc, chosen, budget)


def baseline_random(doc: TranscriptDocument, budget: int, seed: int) -> Summary:
    """Seeded random sentence pick under the budget, emitted in transcript
    order; the same seed always reproduces the same summary."""
    if budget < 1:
        raise ValueError("budget must be at least 1")
    _require_content(doc)
    order = [s.index for s in doc.sentences]
    random.Random(seed).shuffle(order)
    sentences = {s.index: s for s in doc.sentences}
    chosen: list[int] = []
    used = 0
    for idx in order:
        if used + sentences[idx].word_count <= budget:
            chosen.append(idx)
            used += sentences[idx].word_count
    if not chosen:
        chosen = [order[0]]
    return _summary_from_indices(doc, chosen, budget)


@dataclass(frozen=True)
class RougeReport:
    """Per-document recall scores, their unweighted means, and any
    documents that could not be scored."""

    per_document: Mapping[str, Mapping[str, float]]
    corpus_mean: Mapping[str, float]
    errors: Mapping[str, str]

    def jsonl_records(self) -> list[dict]:
        records = [
            {"doc_id": doc_id,
             "rouge1": scores["rouge1"],
             "rouge2": scores["rouge2"],
             "rougeSU4": scores["rougeSU4"]}
            for doc_id, scores in sorted(self.per_document.items())
        ]
        records.append({"doc_id": "<corpus-mean>", **{
            k: self.corpus_mean[k] for k in ("rouge1", "rouge2", "rougeSU4")}})
        return records

    def table_text(self) -> str:
        lines = [f"{'document':<24} {'ROUGE-1':>8} {'ROUGE-2':>8} {'ROUGE-SU4':>10}"]
        for doc_id, scores in sorted(self.per_document.items()):
            lines.append(f"{doc_id:<24} {scores['rouge1']:>8.4f} "
                         f"{scores['rouge2']:>8.4f} {scores['rougeSU4']:>10.4f}")
        lines.append(f"{'mean':<24} {self.corpus_mean['rouge1']:>8.4f} "
                     f"{self.corpus_mean['rouge2']:>8.4f} "
                     f"{self.corpus_mean['rougeSU4']:>10.4f}")
        for doc_id, message in sorted(self.errors.items()):
            lines.append(f"{doc_id:<24} ERROR: {message}")
        return "\n".join(lines) + "\n"


def evaluate_corpus(candidates: Mapping[str, Summary | str],
                    references: Mapping[str, Sequence[str]],
                    stem: bool = False,
                    language_tag: str = "french") -> RougeReport:
    """Score every candidate against its references.

    Candidates and references are tokenized identically (and optionally
    stemmed). A document with no references, or whose references are too
    short to define a score, gets an error entry; the rest of the corpus
    is still scored.
    """
    stemmer = get_stemmer(language_tag) if stem else None

    def _tokens(text: str) -> list[str]:
        tokens = tokenize(text)
        return [stemmer(t) for t in tokens] if stemmer else tokens

    per_document: dict[str, dict[str, float]] = {}
    errors: dict[str, str] = {}
    for doc_id in sorted(candidates):
        candidate = candidates[doc_id]
        text = candidate.text if isinstance(candidate, Summary) else candidate
        refs = references.get(doc_id) or ()
        if not refs:
            errors[doc_id] = "no references"
            continue
        cand_tokens = _tokens(text)
        ref_tokens = [_tokens(r) for r in refs]
        try:
            per_document[doc_id] = {
                "rouge1": rouge_n(cand_tokens, ref_tokens, 1),
                "rouge2": rouge_n(cand_tokens, ref_tokens, 2),
                "rougeSU4": rouge_su(cand_tokens, ref_tokens, 4),
            }
        except UndefinedScoreError as exc:
            errors[doc_id] = str(exc)

    keys = ("rouge1", "rouge2", "rougeSU4")
    if per_document:
        corpus_mean = {k: sum(s[k] for s in per_document.values())
                       / len(per_document) for k in keys}
    else:
        corpus_mean = {k: 0.0 for k in keys}
    return RougeReport(per_document=per_document, corpus_mean=corpus_mean,
                       errors=errors)

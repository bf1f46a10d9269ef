"""Thresholded sentence-similarity graph and degree-based relevance.

Vertices are the sentences that survive TF-ISF pruning; an edge joins two
sentences whose smoothed Jensen-Shannon divergence falls strictly below
the threshold (low divergence = similar). Relevance multiplies a vertex's
degree by its aggregated TF-ISF, so isolated sentences score 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from . import kernels
from .divergence import SmoothingParams
from .errors import EmptyDocumentError
from .preprocess import TranscriptDocument
from .term_model import TermMatrix, TfIsfWeights, tf_isf_sentence


@dataclass(frozen=True, eq=False)
class SimilarityGraph:
    """Undirected sentence graph; edges stored once as (i, j) with i < j."""

    vertex_ids: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    divergences: Mapping[tuple[int, int], float]
    threshold: float

    def __post_init__(self):
        for i, j in self.edges:
            if i >= j:
                raise ValueError(f"edge must be stored as (i, j) with i < j: {(i, j)}")
            if self.divergences[(i, j)] >= self.threshold:
                raise ValueError(f"edge {(i, j)} at or above threshold")

    def degree(self, vertex: int) -> int:
        return sum(1 for i, j in self.edges if vertex in (i, j))

    def degrees(self) -> dict[int, int]:
        out = {v: 0 for v in self.vertex_ids}
        for i, j in self.edges:
            out[i] += 1
            out[j] += 1
        return out

    def edge_list_text(self) -> str:
        """Debug export: one "i j divergence" line per edge."""
        return "".join(f"{i} {j} {self.divergences[(i, j)]:.12g}\n"
                       for i, j in self.edges)


@dataclass(frozen=True)
class RelevanceScores:
    """Per-vertex relevance (degree times sentence TF-ISF) and degree."""

    per_vertex: Mapping[int, float]
    degree: Mapping[int, int]


def prune_by_tfisf(doc: TranscriptDocument, weights: TfIsfWeights,
                   keep_fraction: float) -> list[int]:
    """Keep the top ceil(keep_fraction * count) sentences by TF-ISF score.

    Only sentences with tokens are ranked; ties break toward the lower
    sentence index. At least one sentence always survives.
    """
    if not 0 < keep_fraction <= 1:
        raise ValueError("keep_fraction must be in (0, 1]")
    scorable = [s.index for s in doc.sentences if s.tokens]
    if not scorable:
        raise EmptyDocumentError(f"document {doc.id!r} has no scorable sentence")
    ranked = sorted(scorable, key=lambda i: (-weights.per_sentence[i], i))
    keep = max(1, math.ceil(keep_fraction * len(scorable)))
    return sorted(ranked[:keep])


def build_graph(survivors: list[int], matrix: TermMatrix,
                params: SmoothingParams, threshold: float) -> SimilarityGraph:
    """Compare every survivor pair and keep edges below the threshold."""
    if threshold <= 0:
        raise ValueError("threshold must be positive")

    # concatenated sparse rows for the kernel: term ids ascending per row
    ids_parts, prob_parts, offsets, totals = [], [], [0], []
    for v in survivors:
        row = matrix.rows[v]
        present = np.flatnonzero(row).astype(np.int32)
        total = float(row[present].sum())
        ids_parts.append(present)
        prob_parts.append(row[present] / total)
        offsets.append(offsets[-1] + len(present))
        totals.append(total)

    k = len(survivors)
    pairs = [(a, b) for a in range(k) for b in range(a + 1, k)]
    edges: list[tuple[int, int]] = []
    divergences: dict[tuple[int, int], float] = {}
    if pairs:
        divs = kernels.js_pairs(
            np.concatenate(ids_parts) if ids_parts else np.empty(0, np.int32),
            np.concatenate(prob_parts) if prob_parts else np.empty(0, np.float64),
            np.array(offsets, dtype=np.int64),
            np.array(totals, dtype=np.float64),
            np.array([a for a, _ in pairs], dtype=np.int64),
            np.array([b for _, b in pairs], dtype=np.int64),
            params.gamma, params.beta_factor)
        for (a, b), d in zip(pairs, divs):
            if d < threshold:
                edge = (survivors[a], survivors[b])
                edges.append(edge)
                divergences[edge] = float(d)

    return SimilarityGraph(vertex_ids=tuple(survivors), edges=tuple(edges),
                           divergences=divergences, threshold=threshold)


def score_relevance(graph: SimilarityGraph, matrix: TermMatrix,
                    weights: TfIsfWeights) -> RelevanceScores:
    """Relevance of every vertex: degree times its sentence TF-ISF."""
    degrees = graph.degrees()
    per_vertex = {v: degrees[v] * tf_isf_sentence(matrix, weights, v)
                  for v in graph.vertex_ids}
    return RelevanceScores(per_vertex=per_vertex, degree=degrees)

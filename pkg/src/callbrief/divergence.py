"""Smoothed Jensen-Shannon divergence between sentence distributions, and
the Dice coefficient between sentence term sets.

The divergence is computed over the union vocabulary of the two sentences.
A word one side lacks gets probability (other_prob + gamma) / (N + gamma *
beta), where N is that side's token total and beta = beta_factor * union
size; the side's present words are then scaled down so its smoothed
distribution still sums to 1. With both distributions proper, the value is
bounded by ln 2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import EmptyDistributionError, UnknownTermError
from .term_model import ProbDist


@dataclass(frozen=True)
class SmoothingParams:
    """Missing-word smoothing knobs: gamma is the lent weight, beta_factor
    multiplies the union vocabulary size in the denominator."""

    gamma: float = 0.005
    beta_factor: float = 1.5

    def __post_init__(self):
        if self.gamma <= 0:
            raise ValueError("gamma must be positive")
        if self.beta_factor <= 0:
            raise ValueError("beta_factor must be positive")


def smoothed_prob(w: str, own: ProbDist, other: ProbDist,
                  params: SmoothingParams, voc: int) -> float:
    """Probability of ``w`` under ``own`` after smoothing against ``other``.

    ``voc`` is the union vocabulary size of the two sentences being
    compared. Present words are rescaled by the mass lent to the missing
    ones; missing words receive the smoothing formula directly.
    """
    in_own = w in own.probs
    if not in_own and w not in other.probs:
        raise UnknownTermError(f"term in neither distribution: {w!r}")
    beta = params.beta_factor * voc
    denom = own.token_total + params.gamma * beta
    if in_own:
        lent = sum((other.probs[u] + params.gamma) / denom
                   for u in other.probs if u not in own.probs)
        return own.probs[w] * (1.0 - lent)
    return (other.probs[w] + params.gamma) / denom


def js_divergence(P: ProbDist, Q: ProbDist,
                  params: SmoothingParams = SmoothingParams()) -> float:
    """Smoothed Jensen-Shannon divergence between two sentence distributions."""
    if not P.probs or not Q.probs:
        raise EmptyDistributionError("cannot compare an empty distribution")
    union = sorted(P.probs.keys() | Q.probs.keys())
    ids = {term: i for i, term in enumerate(union)}

    def _sparse(dist: ProbDist):
        terms = sorted(dist.probs, key=ids.__getitem__)
        return (np.array([ids[t] for t in terms], dtype=np.int32),
                np.array([dist.probs[t] for t in terms], dtype=np.float64))

    ids_p, probs_p = _sparse(P)
    ids_q, probs_q = _sparse(Q)
    return float(kernels.js_sparse(ids_p, probs_p, P.token_total,
                                   ids_q, probs_q, Q.token_total,
                                   params.gamma, params.beta_factor))


def dice_coefficient(a: frozenset[str] | set[str],
                     b: frozenset[str] | set[str]) -> float:
    """Dice overlap of two term sets; two empty sets count as identical."""
    if not a and not b:
        return 1.0
    return 2.0 * len(a & b) / (len(a) + len(b))

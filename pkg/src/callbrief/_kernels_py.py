"""Pure-Python divergence kernels: the reference semantics for the
compiled extension, and the fallback when it is unavailable.

Both backends must walk the merged term ids in ascending order and
accumulate in the same sequence so their results agree to the last bit.
"""

from __future__ import annotations

import math

import numpy as np

BACKEND_NAME = "python"


def js_sparse(ids_a, probs_a, n_a, ids_b, probs_b, n_b, gamma, beta_factor):
    """Smoothed Jensen-Shannon divergence between two sparse distributions.

    ``ids_*`` are strictly increasing term ids, ``probs_*`` the matching raw
    probabilities (each summing to 1), ``n_*`` the token totals. Words a
    side is missing receive (other_prob + gamma) / (N + gamma * beta) with
    beta = beta_factor * union size; that side's present words are scaled
    down so the smoothed distribution still sums to 1.
    """
    la, lb = len(ids_a), len(ids_b)

    # pass 1: union size and the mass each side lends to its missing words
    union = 0
    sum_absent_a = 0.0  # other-side probability mass at ids missing from a
    cnt_absent_a = 0
    sum_absent_b = 0.0
    cnt_absent_b = 0
    i = j = 0
    while i < la or j < lb:
        if j >= lb or (i < la and ids_a[i] < ids_b[j]):
            sum_absent_b += probs_a[i]
            cnt_absent_b += 1
            i += 1
        elif i >= la or ids_b[j] < ids_a[i]:
            sum_absent_a += probs_b[j]
            cnt_absent_a += 1
            j += 1
        else:
            i += 1
            j += 1
        union += 1

    beta = beta_factor * union
    denom_a = n_a + gamma * beta
    denom_b = n_b + gamma * beta
    scale_a = 1.0 - (sum_absent_a + gamma * cnt_absent_a) / denom_a
    scale_b = 1.0 - (sum_absent_b + gamma * cnt_absent_b) / denom_b

    # pass 2: accumulate the divergence in ascending id order
    acc = 0.0
    i = j = 0
    while i < la or j < lb:
        if j >= lb or (i < la and ids_a[i] < ids_b[j]):
            pa = probs_a[i] * scale_a
            pb = (probs_a[i] + gamma) / denom_b
            i += 1
        elif i >= la or ids_b[j] < ids_a[i]:
            pa = (probs_b[j] + gamma) / denom_a
            pb = probs_b[j] * scale_b
            j += 1
        else:
            pa = probs_a[i] * scale_a
            pb = probs_b[j] * scale_b
            i += 1
            j += 1
        m = pa + pb
        acc += pa * math.log(2.0 * pa / m) + pb * math.log(2.0 * pb / m)
    return 0.5 * acc


def js_pairs(ids, probs, offsets, totals, pairs_i, pairs_j, gamma, beta_factor):
    """Divergence for many row pairs over a concatenated sparse layout.

    Row r occupies ids[offsets[r]:offsets[r+1]] (same for probs); totals[r]
    is its token count. Returns one value per (pairs_i[k], pairs_j[k]).
    """
    out = np.empty(len(pairs_i), dtype=np.float64)
    for k in range(len(pairs_i)):
        a = pairs_i[k]
        b = pairs_j[k]
        out[k] = js_sparse(
            ids[offsets[a]:offsets[a + 1]], probs[offsets[a]:offsets[a + 1]],
            totals[a],
            ids[offsets[b]:offsets[b + 1]], probs[offsets[b]:offsets[b + 1]],
            totals[b],
            gamma, beta_factor)
    return out

"""Independent reference implementations used as test oracles.

These are deliberately written in a different style from the library
(dict-based, term-by-term, string rewriting) so agreement between the two
routes is meaningful.
"""

import math


def oracle_js(p_probs: dict, n_p: int, q_probs: dict, n_q: int,
              gamma: float = 0.005, beta_factor: float = 1.5) -> float:
    """Brute-force smoothed Jensen-Shannon divergence, term by term.

    Missing words get (other + gamma) / (N + gamma * beta) with beta =
    beta_factor * union size; present words are renormalized so each
    smoothed distribution sums to 1. The divergence sum follows the
    two-logarithm form directly.
    """
    union = sorted(set(p_probs) | set(q_probs))
    voc = len(union)
    beta = beta_factor * voc

    def smooth(own: dict, n_own: int, other: dict) -> dict:
        values = {}
        for w in union:
            if w not in own:
                values[w] = (other[w] + gamma) / (n_own + gamma * beta)
        borrowed = sum(values.values())
        for w in own:
            values[w] = own[w] * (1.0 - borrowed)
        return values

    P = smooth(p_probs, n_p, q_probs)
    Q = smooth(q_probs, n_q, p_probs)
    total = 0.0
    for w in union:
        pw = P[w]
        qw = Q[w]
        total += pw * math.log(2.0 * pw / (pw + qw))
        total += qw * math.log(2.0 * qw / (pw + qw))
    return 0.5 * total


def oracle_smoothed_prob(w: str, own_probs: dict, n_own: int,
                         other_probs: dict, gamma: float,
                         beta_factor: float, voc: int) -> float:
    """Single-term smoothing value, straight from the formula."""
    beta = beta_factor * voc
    if w not in own_probs:
        return (other_probs[w] + gamma) / (n_own + gamma * beta)
    borrowed = sum((other_probs[u] + gamma) / (n_own + gamma * beta)
                   for u in other_probs if u not in own_probs)
    return own_probs[w] * (1.0 - borrowed)


def oracle_strip_brackets(text: str) -> str:
    """Bracket stripping as a rewrite loop instead of a single-pass scan.

    Repeatedly: find the leftmost closing bracket that has a same-type
    opener before it and delete that whole span. Then drop whatever
    brackets remain as lone characters.
    """
    opener_of = {")": "(", "]": "[", "}": "{"}
    while True:
        span = None
        for pos, ch in enumerate(text):
            if ch in opener_of:
                start = text.rfind(opener_of[ch], 0, pos)
                if start != -1:
                    span = (start, pos)
                    break
        if span is None:
            break
        text = text[:span[0]] + text[span[1] + 1:]
    return "".join(ch for ch in text if ch not in "()[]{}")


def oracle_tfisf_term(token_rows: list, term: str) -> float:
    """Term weight recomputed from token lists: total frequency times the
    natural log of (non-empty sentences / sentences containing the term)."""
    tf = sum(row.count(term) for row in token_rows)
    n = sum(1 for row in token_rows if row)
    n_w = sum(1 for row in token_rows if term in row)
    return tf * math.log(n / n_w)


def oracle_tfisf_sentence(token_rows: list, i: int,
                          aggregation: str = "mean") -> float:
    row = token_rows[i]
    if not row:
        return 0.0
    values = [oracle_tfisf_term(token_rows, term) for term in sorted(set(row))]
    if aggregation == "sum":
        return sum(values)
    return sum(values) / len(values)


def oracle_all_pairs(token_rows: list, threshold: float,
                     gamma: float = 0.005, beta_factor: float = 1.5):
    """Edges and degrees over non-empty sentences, via the brute-force
    divergence, applying the strict threshold cut."""
    dists = {}
    for i, row in enumerate(token_rows):
        if row:
            total = len(row)
            dists[i] = ({t: row.count(t) / total for t in set(row)}, total)
    edges = {}
    indices = sorted(dists)
    for a_pos, i in enumerate(indices):
        for j in indices[a_pos + 1:]:
            p, n_p = dists[i]
            q, n_q = dists[j]
            d = oracle_js(p, n_p, q, n_q, gamma, beta_factor)
            if d < threshold:
                edges[(i, j)] = d
    degrees = {i: 0 for i in indices}
    for i, j in edges:
        degrees[i] += 1
        degrees[j] += 1
    return edges, degrees

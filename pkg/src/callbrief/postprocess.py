"""Rule-based cleanup of extracted summaries: drop speech fillers and
colloquialisms, fix known mistranscriptions, collapse duplicated words and
normalize dates.

Rule files are UTF-8, tab-separated, applied in file order:

    REMOVE<TAB>pattern          delete word-boundary matches
    REPLACE<TAB>pattern<TAB>replacement
    DEDUP                       collapse runs of identical adjacent tokens
    DATE<TAB>regex<TAB>template regex substitution (backrefs allowed)

Lines starting with '#' and blank lines are ignored. REMOVE and REPLACE
patterns are literal token sequences; DATE patterns are regular
expressions. Rules run over the summary text only, never over the text
used for scoring.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from pathlib import Path

from .errors import RuleParseError
from .preprocess import count_words
from .summarize import Summary

RULE_KINDS = ("REMOVE", "REPLACE", "DEDUP", "DATE")


@dataclass(frozen=True)
class Rule:
    """One rewrite/removal rule; matching is case-insensitive by default."""

    kind: str
    pattern: str = ""
    replacement: str = ""
    case_sensitive: bool = False

    def __post_init__(self):
        if self.kind not in RULE_KINDS:
            raise ValueError(f"unknown rule kind {self.kind!r}")
        if self.kind in ("REMOVE", "REPLACE", "DATE") and not self.pattern:
            raise ValueError(f"{self.kind} rule needs a pattern")


@dataclass(frozen=True)
class RuleSet:
    """Ordered rules; application order is the file order."""

    rules: tuple[Rule, ...]
    language_tag: str = "french"

    def __len__(self) -> int:
        return len(self.rules)


def load_rules(path: str | Path, language_tag: str = "french") -> RuleSet:
    """Parse a rule file; malformed lines raise a line-numbered error."""
    rules = []
    for line_no, line in enumerate(
            Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        kind = fields[0].strip()
        if kind not in RULE_KINDS:
            raise RuleParseError(line_no, f"unknown rule kind {kind!r}")
        if kind == "DEDUP":
            if len(fields) != 1:
                raise RuleParseError(line_no, "DEDUP takes no pattern")
            rules.append(Rule(kind="DEDUP"))
            continue
        if kind == "REMOVE":
            if len(fields) != 2 or not fields[1]:
                raise RuleParseError(line_no, "REMOVE needs exactly one pattern")
            rules.append(Rule(kind="REMOVE", pattern=fields[1]))
            continue
        # REPLACE / DATE: pattern plus replacement (replacement may be empty)
        if len(fields) != 3 or not fields[1]:
            raise RuleParseError(line_no, f"{kind} needs pattern and replacement")
        if kind == "DATE":
            try:
                re.compile(fields[1])
            except re.error as exc:
                raise RuleParseError(line_no, f"bad DATE regex: {exc}") from None
        rules.append(Rule(kind=kind, pattern=fields[1], replacement=fields[2]))
    return RuleSet(rules=tuple(rules), language_tag=language_tag)


def _literal_regex(rule: Rule) -> re.Pattern:
    tokens = rule.pattern.split()
    body = r"\s+".join(re.escape(t) for t in tokens)
    flags = 0 if rule.case_sensitive else re.IGNORECASE
    return re.compile(rf"\b{body}\b", flags)


def _apply_one(text: str, rule: Rule) -> str:
    if rule.kind == "REMOVE":
        return _literal_regex(rule).sub(" ", text)
    if rule.kind == "REPLACE":
        return _literal_regex(rule).sub(lambda _: rule.replacement, text)
    if rule.kind == "DEDUP":
        fold = (lambda t: t) if rule.case_sensitive else str.lower
        out: list[str] = []
        for token in text.split():
            if not out or fold(out[-1]) != fold(token):
                out.append(token)
        return " ".join(out)
    flags = 0 if rule.case_sensitive else re.IGNORECASE
    return re.compile(rule.pattern, flags).sub(rule.replacement, text)


def apply_rules(text: str, rules: RuleSet) -> str:
    """Apply every rule in order, then re-normalize whitespace.

    An empty rule set is the exact identity.
    """
    if not rules.rules:
        return text
    for rule in rules.rules:
        text = _apply_one(text, rule)
    return " ".join(text.split())


def postprocess_summary(summary: Summary, rules: RuleSet) -> Summary:
    """Clean each summary sentence; drop those the rules empty out.

    If every sentence empties out, the highest-relevance sentence is kept
    unprocessed and a warning is recorded on the summary.
    """
    if not rules.rules:
        return summary

    kept_indices: list[int] = []
    kept_texts: list[str] = []
    for idx, raw in zip(summary.selected, summary.sentence_texts):
        cleaned = apply_rules(raw, rules)
        if cleaned:
            kept_indices.append(idx)
            kept_texts.append(cleaned)

    if not kept_indices:
        if summary.scores:
            best = min(summary.selected,
                       key=lambda i: (-summary.scores[i], i))
        else:
            best = summary.selected[0]
        original = dict(zip(summary.selected, summary.sentence_texts))[best]
        return replace(
            summary,
            selected=(best,),
            text=original,
            word_count=count_words(original),
            scores={best: summary.scores[best]} if summary.scores else None,
            warnings=summary.warnings + (
                "cleanup emptied every sentence; kept the highest-relevance "
                "sentence unprocessed",),
        )

    text = "\n".join(kept_texts)
    return replace(
        summary,
        selected=tuple(kept_indices),
        text=text,
        word_count=sum(count_words(t) for t in kept_texts),
        scores={i: summary.scores[i] for i in kept_indices}
        if summary.scores else None,
    )

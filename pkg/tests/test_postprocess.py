"""Rule parsing and summary cleanup."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from callbrief.errors import RuleParseError
from callbrief.postprocess import (Rule, RuleSet, apply_rules, load_rules,
                                   postprocess_summary)
from callbrief.preprocess import count_words
from callbrief.summarize import Summary


def ruleset(*rules: Rule) -> RuleSet:
    return RuleSet(rules=tuple(rules))


class TestLoadRules:
    def test_remove_rule(self, tmp_path):
        path = tmp_path / "r.tsv"
        path.write_text("REMOVE\teuh\n", encoding="utf-8")
        rs = load_rules(path)
        assert len(rs) == 1
        assert rs.rules[0] == Rule(kind="REMOVE", pattern="euh")

    def test_replace_rule(self, tmp_path):
        path = tmp_path / "r.tsv"
        path.write_text("REPLACE\tvoila\tvoilà\n", encoding="utf-8")
        rs = load_rules(path)
        assert rs.rules[0] == Rule(kind="REPLACE", pattern="voila",
                                   replacement="voilà")

    def test_unknown_kind(self, tmp_path):
        path = tmp_path / "r.tsv"
        path.write_text("BOGUS\tx\n", encoding="utf-8")
        with pytest.raises(RuleParseError) as err:
            load_rules(path)
        assert err.value.line_number == 1

    def test_line_numbers_count_comments(self, tmp_path):
        path = tmp_path / "r.tsv"
        path.write_text("# header\nREMOVE\teuh\nREMOVE\n", encoding="utf-8")
        with pytest.raises(RuleParseError) as err:
            load_rules(path)
        assert err.value.line_number == 3

    def test_dedup_takes_no_pattern(self, tmp_path):
        path = tmp_path / "r.tsv"
        path.write_text("DEDUP\tx\n", encoding="utf-8")
        with pytest.raises(RuleParseError):
            load_rules(path)

    def test_replace_needs_replacement_field(self, tmp_path):
        path = tmp_path / "r.tsv"
        path.write_text("REPLACE\tvoila\n", encoding="utf-8")
        with pytest.raises(RuleParseError):
            load_rules(path)

    def test_replacement_may_be_empty(self, tmp_path):
        path = tmp_path / "r.tsv"
        path.write_text("REPLACE\tvoila\t\n", encoding="utf-8")
        assert load_rules(path).rules[0].replacement == ""

    def test_bad_date_regex(self, tmp_path):
        path = tmp_path / "r.tsv"
        path.write_text("DATE\t([a\tx\n", encoding="utf-8")
        with pytest.raises(RuleParseError):
            load_rules(path)

    def test_comments_blanks_and_order(self, tmp_path):
        path = tmp_path / "r.tsv"
        path.write_text("# cleanup\n\nREMOVE\teuh\nDEDUP\n", encoding="utf-8")
        rs = load_rules(path)
        assert [r.kind for r in rs.rules] == ["REMOVE", "DEDUP"]


class TestApplyRules:
    def test_remove_filler(self):
        rs = ruleset(Rule(kind="REMOVE", pattern="euh"))
        assert apply_rules("euh bonjour euh madame", rs) == "bonjour madame"

    def test_dedup_run_collapse(self):
        rs = ruleset(Rule(kind="DEDUP"))
        assert apply_rules("oui oui oui d'accord", rs) == "oui d'accord"

    def test_ordered_application(self):
        rs = ruleset(Rule(kind="REMOVE", pattern="euh"), Rule(kind="DEDUP"))
        assert apply_rules("le le euh euh billet", rs) == "le billet"

    def test_replace_word(self):
        rs = ruleset(Rule(kind="REPLACE", pattern="voila",
                          replacement="voilà"))
        assert apply_rules("et voila madame", rs) == "et voilà madame"

    def test_word_boundaries_respected(self):
        rs = ruleset(Rule(kind="REMOVE", pattern="euh"))
        assert apply_rules("la meuh meugle", rs) == "la meuh meugle"

    def test_case_insensitive_by_default(self):
        rs = ruleset(Rule(kind="REMOVE", pattern="euh"))
        assert apply_rules("Euh bonjour EUH", rs) == "bonjour"

    def test_case_sensitive_flag(self):
        rs = ruleset(Rule(kind="REMOVE", pattern="euh", case_sensitive=True))
        assert apply_rules("Euh bonjour euh", rs) == "Euh bonjour"

    def test_multiword_pattern(self):
        rs = ruleset(Rule(kind="REMOVE", pattern="ben voilà"))
        assert apply_rules("ben voilà c'est ça", rs) == "c'est ça"

    def test_date_normalization(self):
        rs = ruleset(Rule(kind="DATE",
                          pattern=r"\b(\d{1,2}) (\d{1,2}) (\d{4})\b",
                          replacement=r"\1/\2/\3"))
        assert apply_rules("le 1 2 2015 au matin", rs) == "le 1/2/2015 au matin"

    def test_whitespace_renormalized(self):
        rs = ruleset(Rule(kind="REMOVE", pattern="euh"))
        assert apply_rules("  a   euh   b  ", rs) == "a b"

    def test_empty_ruleset_identity(self):
        text = "  a   b  "
        assert apply_rules(text, ruleset()) == text

    def test_dedup_idempotent(self):
        rs = ruleset(Rule(kind="DEDUP"))
        once = apply_rules("le le le train train part", rs)
        assert apply_rules(once, rs) == once

    @given(st.lists(st.sampled_from(["euh", "le", "train", "oui", "part"]),
                    max_size=12))
    def test_remove_dedup_never_grow_token_count(self, words):
        text = " ".join(words)
        rs = ruleset(Rule(kind="REMOVE", pattern="euh"), Rule(kind="DEDUP"))
        assert len(apply_rules(text, rs).split()) <= len(words)


def make_summary(texts, indices=None, scores=None):
    indices = tuple(indices or range(len(texts)))
    words = sum(count_words(t) for t in texts)
    return Summary(document_id="d", selected=indices,
                   text="\n".join(texts), word_count=words, budget=50,
                   selection_word_count=words, scores=scores)


class TestPostprocessSummary:
    def test_empty_ruleset_is_identity(self):
        summary = make_summary(["euh  bonjour", "oui oui"])
        assert postprocess_summary(summary, ruleset()) is summary

    def test_word_count_recomputed(self):
        # 6 + 8 = 14 words shrink to 4 + 6 = 10, indices unchanged
        summary = make_summary(["euh euh le train part vite",
                                "oui oui oui bon d'accord merci madame"],
                               indices=(2, 5))
        rs = ruleset(Rule(kind="REMOVE", pattern="euh"), Rule(kind="DEDUP"))
        assert summary.word_count == 14
        cleaned = postprocess_summary(summary, rs)
        assert cleaned.sentence_texts == (
            "le train part vite", "oui bon d'accord merci madame")
        assert cleaned.word_count == 10
        assert cleaned.selected == (2, 5)
        assert cleaned.selection_word_count == 14

    def test_emptied_sentences_dropped(self):
        summary = make_summary(["euh euh", "le train part"], indices=(1, 4))
        rs = ruleset(Rule(kind="REMOVE", pattern="euh"))
        cleaned = postprocess_summary(summary, rs)
        assert cleaned.selected == (4,)
        assert cleaned.text == "le train part"

    def test_total_erasure_keeps_one_unprocessed_with_warning(self):
        summary = make_summary(["euh euh"])
        rs = ruleset(Rule(kind="REMOVE", pattern="euh"))
        cleaned = postprocess_summary(summary, rs)
        assert cleaned.selected == (0,)
        assert cleaned.text == "euh euh"
        assert cleaned.warnings

    def test_total_erasure_prefers_highest_relevance(self):
        summary = make_summary(["euh", "euh euh"], scores={0: 1.0, 1: 2.0})
        rs = ruleset(Rule(kind="REMOVE", pattern="euh"))
        cleaned = postprocess_summary(summary, rs)
        assert cleaned.selected == (1,)
        assert cleaned.text == "euh euh"
        assert cleaned.warnings

    def test_scores_filtered_with_drops(self):
        summary = make_summary(["euh", "le train"], scores={0: 3.0, 1: 1.0})
        rs = ruleset(Rule(kind="REMOVE", pattern="euh"))
        cleaned = postprocess_summary(summary, rs)
        assert cleaned.scores == {1: 1.0}

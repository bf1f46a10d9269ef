"""Budgeted greedy selection and the end-to-end summarizer."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from callbrief.divergence import dice_coefficient
from callbrief.errors import EmptyDocumentError
from callbrief.graph import RelevanceScores
from callbrief.preprocess import RawTranscript, StopwordList
from callbrief.summarize import (Summary, SummarizerConfig, select_sentences,
                                 summarize, word_budget)

from conftest import make_doc


def scores_for(rel: dict) -> RelevanceScores:
    return RelevanceScores(per_vertex=dict(rel),
                           degree={i: 1 for i in rel})


class TestWordBudget:
    def test_seven_percent(self):
        assert word_budget(make_doc([["x"]], total_words=100), 0.07) == 7

    def test_clamped_to_one(self):
        assert word_budget(make_doc([["x"]], total_words=10), 0.07) == 1

    def test_floor(self):
        assert word_budget(make_doc([["x"]], total_words=99), 0.07) == 6

    def test_bad_ratio(self):
        with pytest.raises(ValueError):
            word_budget(make_doc([["x"]], total_words=10), 0.0)


class TestSelectSentences:
    def test_redundant_duplicate_rejected(self):
        doc = make_doc([["a", "b"], ["a", "b"]], word_counts=[2, 2])
        summary = select_sentences(scores_for({0: 1.0, 1: 1.0}), doc,
                                   budget=100, dice_cutoff=0.5)
        assert summary.selected == (0,)

    def test_minimum_output_overrides_budget(self):
        doc = make_doc([["w"] * 12], word_counts=[12])
        summary = select_sentences(scores_for({0: 1.0}), doc,
                                   budget=7, dice_cutoff=0.5)
        assert summary.selected == (0,)
        assert summary.word_count == 12
        assert summary.budget == 7

    def test_greedy_trace(self):
        # rel [5,4,3,2,1], three words each, budget 7, no overlaps:
        # top two ranks fit, everything else is skipped
        doc = make_doc([["a"], ["b"], ["c"], ["d"], ["e"]],
                       word_counts=[3, 3, 3, 3, 3])
        summary = select_sentences(
            scores_for({0: 5.0, 1: 4.0, 2: 3.0, 3: 2.0, 4: 1.0}),
            doc, budget=7, dice_cutoff=0.5)
        assert summary.selected == (0, 1)
        assert summary.word_count == 6

    def test_skip_and_continue(self):
        # the big middle sentence does not fit; a later smaller one does
        doc = make_doc([["a"], ["b"], ["c"]], word_counts=[3, 10, 4])
        summary = select_sentences(scores_for({0: 3.0, 1: 2.0, 2: 1.0}),
                                   doc, budget=7, dice_cutoff=0.5)
        assert summary.selected == (0, 2)

    def test_transcript_order_output(self):
        doc = make_doc([["a"], ["b"]], word_counts=[2, 2],
                       raw_texts=["first", "second"])
        summary = select_sentences(scores_for({0: 1.0, 1: 5.0}), doc,
                                   budget=10, dice_cutoff=0.5)
        assert summary.selected == (0, 1)
        assert summary.text == "first\nsecond"

    def test_tie_breaks_toward_lower_index(self):
        doc = make_doc([["a"], ["b"]], word_counts=[4, 4])
        summary = select_sentences(scores_for({0: 2.0, 1: 2.0}), doc,
                                   budget=4, dice_cutoff=0.5)
        assert summary.selected == (0,)

    def test_empty_scores(self):
        with pytest.raises(EmptyDocumentError):
            select_sentences(scores_for({}), make_doc([["a"]]),
                             budget=5, dice_cutoff=0.5)

    def test_scores_recorded(self):
        doc = make_doc([["a"], ["b"]], word_counts=[1, 1])
        summary = select_sentences(scores_for({0: 2.0, 1: 1.5}), doc,
                                   budget=10, dice_cutoff=0.5)
        assert summary.scores == {0: 2.0, 1: 1.5}

    def test_rescaling_scores_keeps_selection(self):
        rng = random.Random(5)
        rows = [[rng.choice("abcdef") for _ in range(rng.randint(1, 4))]
                for _ in range(6)]
        doc = make_doc(rows, word_counts=[rng.randint(1, 6) for _ in rows])
        rel = {i: rng.uniform(0, 3) for i in range(6)}
        base = select_sentences(scores_for(rel), doc, 9, 0.5)
        scaled = select_sentences(
            scores_for({i: 2.5 * v for i, v in rel.items()}), doc, 9, 0.5)
        assert base.selected == scaled.selected

    @given(st.data())
    @settings(max_examples=150)
    def test_contract_properties(self, data):
        n = data.draw(st.integers(1, 7))
        rows = [data.draw(st.lists(st.sampled_from("abcdef"), min_size=1,
                                   max_size=4)) for _ in range(n)]
        counts = [data.draw(st.integers(1, 9)) for _ in range(n)]
        rel = {i: data.draw(st.floats(0, 5)) for i in range(n)}
        budget = data.draw(st.integers(1, 25))
        cutoff = data.draw(st.sampled_from([0.3, 0.5, 0.8, 1.0]))
        doc = make_doc(rows, word_counts=counts)
        summary = select_sentences(scores_for(rel), doc, budget, cutoff)

        assert all(b > a for a, b in zip(summary.selected,
                                         summary.selected[1:]))
        if len(summary.selected) >= 2:
            assert summary.word_count <= budget
        sets = [frozenset(rows[i]) for i in summary.selected]
        for x in range(len(sets)):
            for y in range(x + 1, len(sets)):
                assert dice_coefficient(sets[x], sets[y]) < cutoff

    def test_budget_monotone_with_uniform_word_counts(self):
        # greedy prefix property; holds when sentences cost the same
        rng = random.Random(11)
        for _ in range(50):
            n = rng.randint(1, 8)
            rows = [[rng.choice("abcdef") for _ in range(rng.randint(1, 4))]
                    for _ in range(n)]
            doc = make_doc(rows, word_counts=[3] * n)
            rel = {i: rng.uniform(0, 5) for i in range(n)}
            small = select_sentences(scores_for(rel), doc, rng.randint(3, 12),
                                     0.5)
            large = select_sentences(scores_for(rel), doc,
                                     small.budget + rng.randint(1, 12), 0.5)
            assert set(small.selected) <= set(large.selected)


class TestSummarize:
    CONFIG = SummarizerConfig(ratio=0.4, language_tag="none")
    EMPTY_SW = StopwordList(frozenset(), "none")

    def test_single_sentence_transcript(self):
        raw = RawTranscript(id="t", text="un billet pour paris")
        summary = summarize(raw, self.CONFIG, self.EMPTY_SW)
        assert summary.selected == (0,)
        assert summary.text == "un billet pour paris"

    def test_dominant_topic_sentence_selected(self):
        text = ("billet train paris gare voyage\n"
                "billet train paris gare voyage\n"
                "billet train paris gare voyage\n"
                "chat\n"
                "pluie")
        summary = summarize(RawTranscript(id="t", text=text), self.CONFIG,
                            self.EMPTY_SW)
        assert any(i in (0, 1, 2) for i in summary.selected)
        assert "billet train paris gare voyage" in summary.text

    def test_deterministic(self):
        text = ("le train part à huit heures\n"
                "je voudrais un billet\n"
                "le train part à neuf heures\n"
                "merci madame au revoir")
        raw = RawTranscript(id="t", text=text)
        sw = StopwordList.from_words({"le", "je", "un", "à"})
        config = SummarizerConfig(ratio=0.3)
        first = summarize(raw, config, sw)
        second = summarize(raw, config, sw)
        assert first == second
        assert first.text == second.text

    def test_contentless_transcript_raises(self):
        raw = RawTranscript(id="t", text="le le. la la.")
        sw = StopwordList.from_words({"le", "la"})
        with pytest.raises(EmptyDocumentError):
            summarize(raw, SummarizerConfig(), sw)


class TestConfigValidation:
    @pytest.mark.parametrize("kwargs", [
        {"ratio": 0.0}, {"ratio": 1.5}, {"threshold": 0.0},
        {"keep_fraction": 0.0}, {"keep_fraction": 1.2},
        {"dice_cutoff": -0.1}, {"dice_cutoff": 1.1},
        {"gamma": 0.0}, {"beta_factor": 0.0}, {"aggregation": "max"},
    ])
    def test_rejects_bad_values(self, kwargs):
        with pytest.raises(ValueError):
            SummarizerConfig(**kwargs)

    def test_defaults_match_contract(self):
        config = SummarizerConfig()
        assert (config.ratio, config.threshold, config.keep_fraction,
                config.dice_cutoff, config.gamma, config.beta_factor,
                config.aggregation) == (0.07, 0.16, 0.8, 0.5, 0.005, 1.5,
                                        "mean")


class TestSummaryType:
    def test_rejects_unordered_indices(self):
        with pytest.raises(ValueError):
            Summary(document_id="d", selected=(2, 1), text="a\nb",
                    word_count=2, budget=5, selection_word_count=2)

    def test_sentence_texts_roundtrip(self):
        s = Summary(document_id="d", selected=(0, 3), text="un\ndeux",
                    word_count=2, budget=5, selection_word_count=2)
        assert s.sentence_texts == ("un", "deux")

"""Extractive summarization of noisy speech-to-text conversation
transcripts.

The pipeline weighs terms with TF-ISF, links sentences whose smoothed
Jensen-Shannon divergence is low into a similarity graph, scores each
sentence by degree times TF-ISF, and greedily fills a word budget while
rejecting Dice-redundant picks. An optional rule stage then scrubs speech
noise from the extracted summary. A ROUGE evaluator and lead/random
baselines support end-to-end measurement.
"""

__version__ = "0.1.0"

from .divergence import SmoothingParams, dice_coefficient, js_divergence, \
    smoothed_prob
from .errors import CallbriefError, ConfigError, EmptyDistributionError, \
    EmptyDocumentError, RuleParseError, UndefinedScoreError, UnknownTermError
from .graph import RelevanceScores, SimilarityGraph, build_graph, \
    prune_by_tfisf, score_relevance
from .kernels import backend_name
from .postprocess import Rule, RuleSet, apply_rules, load_rules, \
    postprocess_summary
from .preprocess import RawTranscript, Sentence, StopwordList, \
    TranscriptDocument, count_words, load_stopwords, preprocess_document, \
    remove_stopwords, segment_sentences, strip_brackets, tokenize
from .rouge import NGramBag, RougeReport, baseline_lead, baseline_random, \
    evaluate_corpus, ngram_bag, rouge_n, rouge_su
from .stemming import get_stemmer, stem
from .summarize import PipelineStages, Summary, SummarizerConfig, \
    run_stages, select_sentences, summarize, summarize_document, word_budget
from .term_model import ProbDist, TermMatrix, TfIsfWeights, build_matrix, \
    compute_tf_isf, sentence_distribution, tf_isf_sentence, tf_isf_term

__all__ = [
    "__version__",
    "CallbriefError", "ConfigError", "EmptyDistributionError",
    "EmptyDocumentError", "RuleParseError", "UndefinedScoreError",
    "UnknownTermError",
    "RawTranscript", "Sentence", "StopwordList", "TranscriptDocument",
    "count_words", "load_stopwords", "preprocess_document",
    "remove_stopwords", "segment_sentences", "strip_brackets", "tokenize",
    "get_stemmer", "stem",
    "ProbDist", "TermMatrix", "TfIsfWeights", "build_matrix",
    "compute_tf_isf", "sentence_distribution", "tf_isf_sentence",
    "tf_isf_term",
    "SmoothingParams", "dice_coefficient", "js_divergence", "smoothed_prob",
    "backend_name",
    "RelevanceScores", "SimilarityGraph", "build_graph", "prune_by_tfisf",
    "score_relevance",
    "PipelineStages", "Summary", "SummarizerConfig", "run_stages",
    "select_sentences", "summarize", "summarize_document", "word_budget",
    "Rule", "RuleSet", "apply_rules", "load_rules", "postprocess_summary",
    "NGramBag", "RougeReport", "baseline_lead", "baseline_random",
    "evaluate_corpus", "ngram_bag", "rouge_n", "rouge_su",
]

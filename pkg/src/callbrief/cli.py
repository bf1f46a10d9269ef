"""Command-line interface: batch summarization, baselines, evaluation and
the four-system comparison pipeline.

Every run writes a manifest holding the full configuration, the seed and
input digests, so reruns are reproducible bit for bit. Defaults for the
numeric flags can be overridden with CALLBRIEF_<NAME> environment
variables (e.g. CALLBRIEF_RATIO=0.05); explicit flags win over both.
Per-document failures are recorded and do not abort the batch; the exit
status is non-zero when at least one error occurred.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import zlib
from concurrent.futures import ThreadPoolExecutor
from importlib import resources
from pathlib import Path

from . import __version__
from .errors import CallbriefError, ConfigError
from .kernels import backend_name
from .postprocess import RuleSet, load_rules, postprocess_summary
from .preprocess import RawTranscript, StopwordList, TranscriptDocument, \
    load_stopwords, preprocess_document
from .rouge import baseline_lead, baseline_random, evaluate_corpus
from .summarize import Summary, SummarizerConfig, run_stages, \
    summary_record, word_budget

ENV_PREFIX = "CALLBRIEF_"

SYSTEM_CLEANED = "graph-cleaned"   # divergence graph + rule cleanup
SYSTEM_GRAPH = "graph"             # divergence graph only
SYSTEM_LEAD = "lead"
SYSTEM_RANDOM = "random"


def _env(name: str, cast, fallback):
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return fallback
    try:
        return cast(raw)
    except ValueError:
        raise ConfigError(f"bad value for {ENV_PREFIX}{name}: {raw!r}") from None


def default_stopwords_path() -> Path:
    return Path(resources.files("callbrief").joinpath("data/stopwords_fr.txt"))


def default_rules_path() -> Path:
    return Path(resources.files("callbrief").joinpath("data/rules_fr.tsv"))


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _doc_seed(base_seed: int, doc_id: str) -> int:
    # stable per-document variation of the user seed
    return base_seed ^ zlib.crc32(doc_id.encode("utf-8"))


def _read_transcripts(input_dir: Path) -> list[tuple[str, Path]]:
    if not input_dir.is_dir():
        raise ConfigError(f"input directory not found: {input_dir}")
    files = sorted(p for p in input_dir.iterdir()
                   if p.is_file() and not p.name.startswith("."))
    if not files:
        raise ConfigError(f"no transcripts found in {input_dir}")
    return [(p.stem, p) for p in files]


def _read_references(refs_dir: Path) -> dict[str, list[str]]:
    if not refs_dir.is_dir():
        raise ConfigError(f"references directory not found: {refs_dir}")
    references: dict[str, list[str]] = {}
    for sub in sorted(p for p in refs_dir.iterdir() if p.is_dir()):
        texts = [f.read_text(encoding="utf-8")
                 for f in sorted(sub.iterdir()) if f.is_file()]
        if texts:
            references[sub.name] = texts
    return references


def _config_from_args(args) -> SummarizerConfig:
    return SummarizerConfig(
        ratio=args.ratio, threshold=args.threshold,
        keep_fraction=args.keep_fraction, dice_cutoff=args.dice_cutoff,
        gamma=args.gamma, beta_factor=args.beta_factor,
        aggregation=args.aggregation, language_tag=args.language)


def _config_record(config: SummarizerConfig) -> dict:
    return {
        "ratio": config.ratio, "threshold": config.threshold,
        "keep_fraction": config.keep_fraction,
        "dice_cutoff": config.dice_cutoff, "gamma": config.gamma,
        "beta_factor": config.beta_factor, "aggregation": config.aggregation,
        "language": config.language_tag,
    }


def _write_json(path: Path, payload) -> None:
    path.write_text(json.dumps(payload, sort_keys=True, indent=2,
                               ensure_ascii=False) + "\n", encoding="utf-8")


def _write_jsonl(path: Path, records) -> None:
    lines = [json.dumps(r, sort_keys=True, ensure_ascii=False)
             for r in records]
    path.write_text("\n".join(lines) + ("\n" if lines else ""),
                    encoding="utf-8")


def _document_entry(doc_id: str, summary: Summary | None,
                    error: str | None) -> dict:
    if summary is None:
        return {"id": doc_id, "error": error}
    entry = {"id": doc_id, **summary_record(summary)}
    entry.pop("document_id")
    return entry


def _summarize_one(doc: TranscriptDocument, config: SummarizerConfig,
                   rules: RuleSet | None, dump_dir: Path | None):
    stages = run_stages(doc, config)
    summary = stages.summary
    if rules is not None:
        summary = postprocess_summary(summary, rules)
    if dump_dir is not None:
        (dump_dir / f"{doc.id}.edges").write_text(
            stages.graph.edge_list_text(), encoding="utf-8")
    return summary


def _process_documents(worker, doc_ids: list[str], workers: int) -> dict:
    """Run worker(doc_id) for every document, failures recorded not raised."""
    results: dict[str, tuple] = {}

    def _run(doc_id: str):
        try:
            return doc_id, (worker(doc_id), None)
        except CallbriefError as exc:
            return doc_id, (None, str(exc))

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for doc_id, outcome in pool.map(_run, doc_ids):
                results[doc_id] = outcome
    else:
        for doc_id in doc_ids:
            doc_id, outcome = _run(doc_id)
            results[doc_id] = outcome
    return results


def run_summarize(args) -> int:
    config = _config_from_args(args)
    stopwords_path = Path(args.stopwords) if args.stopwords \
        else default_stopwords_path()
    stopwords = load_stopwords(stopwords_path, args.language)
    rules = load_rules(args.rules) if args.rules else None
    mode = SYSTEM_CLEANED if rules is not None else SYSTEM_GRAPH

    transcripts = _read_transcripts(Path(args.input_dir))
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    dump_dir = None
    if args.dump_graphs:
        dump_dir = Path(args.dump_graphs)
        dump_dir.mkdir(parents=True, exist_ok=True)

    paths = dict(transcripts)
    docs = {
        doc_id: preprocess_document(
            RawTranscript(id=doc_id, text=path.read_text(encoding="utf-8")),
            stopwords, args.language)
        for doc_id, path in transcripts
    }
    results = _process_documents(
        lambda doc_id: _summarize_one(docs[doc_id], config, rules, dump_dir),
        sorted(docs), args.workers)

    documents = []
    for doc_id in sorted(results):
        summary, error = results[doc_id]
        if summary is not None:
            (out_dir / f"{doc_id}.txt").write_text(summary.text + "\n",
                                                   encoding="utf-8")
        documents.append(_document_entry(doc_id, summary, error))

    _write_jsonl(out_dir / "summaries.jsonl",
                 [summary_record(s) for s, _ in
                  (results[d] for d in sorted(results)) if s is not None])
    manifest = {
        "command": "summarize",
        "version": __version__,
        "kernel_backend": backend_name(),
        "mode": mode,
        "config": _config_record(config),
        "stopwords": {"file": stopwords_path.name,
                      "sha256": _sha256(stopwords_path)},
        "rules": ({"file": Path(args.rules).name,
                   "sha256": _sha256(Path(args.rules))}
                  if args.rules else None),
        "inputs": [{"id": doc_id, "file": paths[doc_id].name,
                    "sha256": _sha256(paths[doc_id])}
                   for doc_id in sorted(paths)],
        "documents": documents,
    }
    _write_json(out_dir / "manifest.json", manifest)

    errors = [d for d in documents if d.get("error")]
    for entry in errors:
        print(f"error: {entry['id']}: {entry['error']}", file=sys.stderr)
    print(f"{len(documents) - len(errors)}/{len(documents)} documents "
          f"summarized into {out_dir} ({mode} mode)")
    return 1 if errors else 0


def run_baseline(args) -> int:
    transcripts = _read_transcripts(Path(args.input_dir))
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    empty = StopwordList(frozenset(), "none")

    paths = dict(transcripts)
    docs = {
        doc_id: preprocess_document(
            RawTranscript(id=doc_id, text=path.read_text(encoding="utf-8")),
            empty, "none")
        for doc_id, path in transcripts
    }

    def worker(doc_id: str) -> Summary:
        doc = docs[doc_id]
        budget = word_budget(doc, args.ratio)
        if args.kind == "lead":
            return baseline_lead(doc, budget)
        return baseline_random(doc, budget, _doc_seed(args.seed, doc_id))

    results = _process_documents(worker, sorted(docs), args.workers)
    documents = []
    for doc_id in sorted(results):
        summary, error = results[doc_id]
        if summary is not None:
            (out_dir / f"{doc_id}.txt").write_text(summary.text + "\n",
                                                   encoding="utf-8")
        documents.append(_document_entry(doc_id, summary, error))

    manifest = {
        "command": "baseline",
        "version": __version__,
        "mode": args.kind,
        "seed": args.seed if args.kind == "random" else None,
        "config": {"ratio": args.ratio},
        "inputs": [{"id": doc_id, "file": paths[doc_id].name,
                    "sha256": _sha256(paths[doc_id])}
                   for doc_id in sorted(paths)],
        "documents": documents,
    }
    _write_json(out_dir / "manifest.json", manifest)
    errors = [d for d in documents if d.get("error")]
    print(f"{len(documents) - len(errors)}/{len(documents)} {args.kind} "
          f"baselines written to {out_dir}")
    return 1 if errors else 0


def run_evaluate(args) -> int:
    candidates_dir = Path(args.candidates_dir)
    if not candidates_dir.is_dir():
        raise ConfigError(f"candidates directory not found: {candidates_dir}")
    candidates = {p.stem: p.read_text(encoding="utf-8")
                  for p in sorted(candidates_dir.iterdir())
                  if p.is_file() and p.suffix == ".txt"}
    if not candidates:
        raise ConfigError(f"no candidate summaries in {candidates_dir}")
    references = _read_references(Path(args.refs))

    report = evaluate_corpus(candidates, references, stem=args.stem,
                             language_tag=args.language)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "report.txt").write_text(report.table_text(), encoding="utf-8")
    _write_jsonl(out_dir / "report.jsonl", report.jsonl_records())
    print(report.table_text(), end="")
    return 1 if report.errors else 0


def run_pipeline(args) -> int:
    config = _config_from_args(args)
    stopwords_path = Path(args.stopwords) if args.stopwords \
        else default_stopwords_path()
    stopwords = load_stopwords(stopwords_path, args.language)
    rules_path = Path(args.rules) if args.rules else default_rules_path()
    rules = load_rules(rules_path)

    transcripts = _read_transcripts(Path(args.input_dir))
    references = _read_references(Path(args.refs))
    out_dir = Path(args.out)
    systems_dir = out_dir / "systems"

    paths = dict(transcripts)
    docs = {
        doc_id: preprocess_document(
            RawTranscript(id=doc_id, text=path.read_text(encoding="utf-8")),
            stopwords, args.language)
        for doc_id, path in transcripts
    }

    def worker(doc_id: str) -> dict[str, Summary]:
        doc = docs[doc_id]
        stages = run_stages(doc, config)
        budget = word_budget(doc, config.ratio)
        return {
            SYSTEM_GRAPH: stages.summary,
            SYSTEM_CLEANED: postprocess_summary(stages.summary, rules),
            SYSTEM_LEAD: baseline_lead(doc, budget),
            SYSTEM_RANDOM: baseline_random(doc, budget,
                                           _doc_seed(args.seed, doc_id)),
        }

    results = _process_documents(worker, sorted(docs), args.workers)

    system_names = (SYSTEM_CLEANED, SYSTEM_GRAPH, SYSTEM_LEAD, SYSTEM_RANDOM)
    per_system: dict[str, dict[str, Summary]] = {s: {} for s in system_names}
    documents = []
    for doc_id in sorted(results):
        summaries, error = results[doc_id]
        if error:
            documents.append({"id": doc_id, "error": error})
            continue
        entry = {"id": doc_id}
        for system in system_names:
            summary = summaries[system]
            per_system[system][doc_id] = summary
            record = summary_record(summary)
            record.pop("document_id")
            entry[system] = record
        documents.append(entry)

    rows = []
    for system in system_names:
        summaries = per_system[system]
        sys_dir = systems_dir / system
        sys_dir.mkdir(parents=True, exist_ok=True)
        for doc_id, summary in sorted(summaries.items()):
            (sys_dir / f"{doc_id}.txt").write_text(summary.text + "\n",
                                                   encoding="utf-8")
        report = evaluate_corpus(summaries, references)
        rows.append({
            "system": system,
            "rouge1": report.corpus_mean["rouge1"],
            "rouge2": report.corpus_mean["rouge2"],
            "rougeSU4": report.corpus_mean["rougeSU4"],
            "documents_scored": len(report.per_document),
            "errors": dict(sorted(report.errors.items())),
        })
    rows.sort(key=lambda r: (-r["rouge2"], r["system"]))

    lines = [f"{'system':<16} {'ROUGE-1':>8} {'ROUGE-2':>8} {'ROUGE-SU4':>10}"]
    for row in rows:
        lines.append(f"{row['system']:<16} {row['rouge1']:>8.4f} "
                     f"{row['rouge2']:>8.4f} {row['rougeSU4']:>10.4f}")
    table = "\n".join(lines) + "\n"
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "comparison.txt").write_text(table, encoding="utf-8")
    _write_jsonl(out_dir / "comparison.jsonl", rows)

    manifest = {
        "command": "pipeline",
        "version": __version__,
        "kernel_backend": backend_name(),
        "config": _config_record(config),
        "seed": args.seed,
        "stopwords": {"file": stopwords_path.name,
                      "sha256": _sha256(stopwords_path)},
        "rules": {"file": rules_path.name, "sha256": _sha256(rules_path)},
        "inputs": [{"id": doc_id, "file": paths[doc_id].name,
                    "sha256": _sha256(paths[doc_id])}
                   for doc_id in sorted(paths)],
        "documents": documents,
        "comparison": rows,
    }
    _write_json(out_dir / "manifest.json", manifest)

    print(table, end="")
    doc_errors = [d for d in documents if d.get("error")]
    ref_errors = any(row["errors"] for row in rows)
    return 1 if doc_errors or ref_errors else 0


def _add_summarizer_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--ratio", type=float,
                        default=_env("RATIO", float, 0.07),
                        help="word budget as a fraction of transcript words")
    parser.add_argument("--threshold", type=float,
                        default=_env("THRESHOLD", float, 0.16),
                        help="divergence edge cut for the sentence graph")
    parser.add_argument("--keep-fraction", type=float,
                        default=_env("KEEP_FRACTION", float, 0.8),
                        help="fraction of sentences surviving TF-ISF pruning")
    parser.add_argument("--dice-cutoff", type=float,
                        default=_env("DICE_CUTOFF", float, 0.5),
                        help="redundancy bound on the Dice coefficient")
    parser.add_argument("--gamma", type=float,
                        default=_env("GAMMA", float, 0.005),
                        help="smoothing weight for missing words")
    parser.add_argument("--beta-factor", type=float,
                        default=_env("BETA_FACTOR", float, 1.5),
                        help="smoothing denominator factor (times union size)")
    parser.add_argument("--aggregation", choices=("mean", "sum"),
                        default=_env("AGGREGATION", str, "mean"),
                        help="sentence TF-ISF aggregation over distinct terms")
    parser.add_argument("--language", default=_env("LANGUAGE", str, "french"),
                        help="stemmer language tag (french, none)")


def _add_common_io(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", required=True, help="output directory")
    parser.add_argument("--workers", type=int,
                        default=_env("WORKERS", int, 1),
                        help="concurrent documents (results are "
                             "deterministic regardless)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="callbrief",
        description="Extractive summarization of noisy conversation "
                    "transcripts, with evaluation tooling.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("summarize",
                       help="summarize every transcript in a directory")
    p.add_argument("input_dir", help="directory of transcript files")
    _add_common_io(p)
    p.add_argument("--stopwords", help="stopword file (default: bundled "
                                       "French list)")
    p.add_argument("--rules", help="cleanup rule file; omit to skip the "
                                   "cleanup stage")
    p.add_argument("--dump-graphs", help="directory for per-document "
                                         "edge-list dumps")
    _add_summarizer_options(p)
    p.set_defaults(func=run_summarize)

    p = sub.add_parser("baseline", help="lead or random baseline summaries")
    p.add_argument("input_dir", help="directory of transcript files")
    p.add_argument("--kind", choices=("lead", "random"), required=True)
    p.add_argument("--seed", type=int, default=_env("SEED", int, 0))
    p.add_argument("--ratio", type=float,
                   default=_env("RATIO", float, 0.07))
    _add_common_io(p)
    p.set_defaults(func=run_baseline)

    p = sub.add_parser("evaluate",
                       help="score candidate summaries against references")
    p.add_argument("candidates_dir", help="directory of candidate .txt files")
    p.add_argument("--refs", required=True,
                   help="references directory (one subdirectory per "
                        "document id, one file per reference)")
    p.add_argument("--stem", action="store_true",
                   help="stem tokens before scoring")
    p.add_argument("--language", default=_env("LANGUAGE", str, "french"))
    _add_common_io(p)
    p.set_defaults(func=run_evaluate)

    p = sub.add_parser("pipeline",
                       help="run all four systems and compare by ROUGE")
    p.add_argument("input_dir", help="directory of transcript files")
    p.add_argument("--refs", required=True, help="references directory")
    p.add_argument("--stopwords", help="stopword file (default: bundled)")
    p.add_argument("--rules", help="cleanup rule file (default: bundled)")
    p.add_argument("--seed", type=int, default=_env("SEED", int, 0))
    _add_common_io(p)
    _add_summarizer_options(p)
    p.set_defaults(func=run_pipeline)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CallbriefError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

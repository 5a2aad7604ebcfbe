"""Command-line front end: ingest, train, eval, summarize, keywords,
explain, drift.

All commands exit 0 on success and nonzero with a one-line diagnostic on
stderr otherwise. Output files are written to a temp path and renamed into
place so failures never leave partial files.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace
from pathlib import Path

from . import analysis, keywords, pipeline, summarizer
from .config import AppConfig, ConfigError, load_config
from .corpus import (DatasetError, build_dataset, load_dataset, read_article,
                     read_corpus_dir, save_dataset)
from .pipeline import ModelArchiveError, load_pipeline, save_pipeline
from .summarizer import Summary, SummaryConfig, ScoredSentence


def _atomic_write(path: Path, write_fn) -> None:
    tmp = path.with_name(path.name + ".tmp")
    try:
        write_fn(tmp)
        os.replace(tmp, path)
    finally:
        tmp.unlink(missing_ok=True)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        print(text)
    else:
        _atomic_write(Path(out), lambda tmp: tmp.write_text(text + "\n", "utf-8"))


def _load_app_config(args) -> AppConfig:
    cfg = load_config(args.config) if getattr(args, "config", None) else AppConfig()
    if getattr(args, "seed", None) is not None:
        cfg = cfg.with_seed(args.seed)
    if getattr(args, "no_smote", False):
        cfg = replace(cfg, smote=replace(cfg.smote, enabled=False))
    return cfg


# ---------------------------------------------------------------------------
# commands

def cmd_ingest(args) -> int:
    labels = tuple(args.labels.split(",")) if args.labels else None
    if labels is not None and len(labels) != 2:
        raise DatasetError(f"--labels needs exactly 2 comma-separated names, got {args.labels!r}")
    articles = read_corpus_dir(args.in_dir, labels)
    dataset = build_dataset(articles)
    _atomic_write(Path(args.out_dataset), lambda tmp: save_dataset(dataset, tmp))

    counts = {lab: {"articles": 0, "sentences": 0} for lab in dataset.labels}
    seen = set()
    for s in dataset.sentences:
        counts[s.label]["sentences"] += 1
        if s.article_id not in seen:
            seen.add(s.article_id)
            counts[s.label]["articles"] += 1
    print(f"{'Source':<20} {'Unit':<10} {'Count':>8}")
    for lab in dataset.labels:
        print(f"{lab:<20} {'Articles':<10} {counts[lab]['articles']:>8}")
        print(f"{'':<20} {'Sentences':<10} {counts[lab]['sentences']:>8}")
    print(f"dataset written to {args.out_dataset}")
    return 0


def cmd_train(args) -> int:
    cfg = _load_app_config(args)
    dataset = load_dataset(args.dataset)
    fitted = pipeline.fit_pipeline(dataset, cfg)
    _atomic_write(Path(args.model_out), lambda tmp: save_pipeline(fitted, tmp))

    sizes = {lab: 0 for lab in dataset.labels}
    for s in dataset.sentences:
        sizes[s.label] += 1
    balanced = {lab: (max(sizes.values()) if cfg.smote.enabled else n)
                for lab, n in sizes.items()}
    print(f"vocabulary size: {len(fitted.vocabulary)}")
    for lab in dataset.labels:
        print(f"class {lab}: {sizes[lab]} sentences, {balanced[lab]} after balancing")
    print(f"model written to {args.model_out}")
    return 0


def cmd_eval(args) -> int:
    cfg = _load_app_config(args)
    dataset = load_dataset(args.dataset)
    report = pipeline.evaluate(dataset, cfg, test_fraction=args.test_fraction)
    print(f"{'Class':<20} {'Samples':>8} {'Precision':>10} {'Recall':>8} {'Accuracy':>9}")
    for lab in dataset.labels:
        m = report.per_class[lab]
        print(f"{lab:<20} {m.samples:>8} {m.precision:>10.2f} {m.recall:>8.2f} {'---':>9}")
    print(f"{'Overall':<20} {report.samples:>8} {report.precision:>10.2f} "
          f"{report.recall:>8.2f} {report.accuracy:>9.2f}")
    return 0


def _summary_doc(title: str, target: str, summary: Summary) -> dict:
    return {
        "title": title,
        "target_class": target,
        "char_count": summary.char_count,
        "sentences": [
            {"position": s.position, "text": s.text, "class_prob": s.class_prob,
             "base_score": s.base_score, "lwf": s.lwf, "weighted": s.weighted}
            for s in summary.sentences
        ],
    }


def cmd_summarize(args) -> int:
    fitted = load_pipeline(args.model)
    article = read_article(args.article_file)
    defaults = fitted.config.summarizer
    cfg = SummaryConfig(
        target_class=args.target_class,
        exponent_x=args.x if args.x is not None else defaults.exponent_x,
        lwf_a=defaults.lwf_a, lwf_b=defaults.lwf_b, lwf_c=defaults.lwf_c,
        max_chars=args.max_chars if args.max_chars is not None else defaults.max_chars,
        min_chars=min(defaults.min_chars,
                      args.max_chars if args.max_chars is not None else defaults.max_chars),
    )
    summary = summarizer.summarize(article, fitted, cfg)
    if summary.char_count < defaults.min_chars:
        print(f"note: summary is {summary.char_count} chars, below the advisory "
              f"minimum of {defaults.min_chars}", file=sys.stderr)
    if args.json:
        doc = _summary_doc(article.title, args.target_class, summary)
        _emit(json.dumps(doc, ensure_ascii=False, sort_keys=True), args.out)
    else:
        _emit(summary.text, args.out)
    return 0


def cmd_keywords(args) -> int:
    fitted = load_pipeline(args.model)
    article = read_article(args.article_file)
    limit = args.limit if args.limit is not None else fitted.config.keywords.limit
    scores = keywords.recommend(article, fitted, args.target_class, limit=limit)
    if args.json:
        doc = [{"word": k.word, "a": k.a, "observed": k.observed,
                "expected": k.expected, "d": k.d, "score": k.score} for k in scores]
        _emit(json.dumps(doc, ensure_ascii=False, sort_keys=True), args.out)
    else:
        lines = [f"{k.word}  {k.score:.4f}" for k in scores]
        _emit("\n".join(lines) if lines else "(no keywords)", args.out)
    return 0


def cmd_explain(args) -> int:
    fitted = load_pipeline(args.model)
    result = analysis.explain(args.sentence, fitted, args.target_class)
    print(f"P({args.target_class}) = {result.predicted_prob:.3f}")
    print(f"{'Weight':>8}  Feature")
    for feat, weight in result.contributions:
        print(f"{weight:>+8.3f}  {feat}")
    return 0


def cmd_drift(args) -> int:
    fitted = load_pipeline(args.model)
    article = read_article(args.article_file)
    doc = json.loads(Path(args.summary_file).read_text("utf-8"))
    sentences = [
        ScoredSentence(position=s["position"], text=s["text"],
                       word_count=len(s["text"].split()), base_score=s["base_score"],
                       class_prob=s["class_prob"], lwf=s["lwf"], weighted=s["weighted"])
        for s in doc["sentences"]
    ]
    summary = Summary(sentences=sentences,
                      char_count=len(" ".join(s.text for s in sentences)))
    report = analysis.drift_score(article, summary, fitted, args.target_class)
    print(f"article mean P({args.target_class}) = {report.article_mean_prob:.4f}")
    print(f"summary mean P({args.target_class}) = {report.summary_mean_prob:.4f}")
    print(f"drift = {report.drift:.4f}")
    return 0


# ---------------------------------------------------------------------------
# argument wiring

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slantsum",
        description="Train a stance classifier on a two-class news corpus and "
                    "produce class-leaning extractive summaries.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="build a sentence dataset from a labeled article directory")
    p.add_argument("in_dir", help="directory with one subdirectory per class label")
    p.add_argument("out_dataset", help="output dataset file (one JSON record per line)")
    p.add_argument("--labels", help="comma-separated label order, e.g. A,B (default: sorted)")
    p.set_defaults(fn=cmd_ingest)

    p = sub.add_parser("train", help="fit the pipeline on a dataset and save the model")
    p.add_argument("dataset")
    p.add_argument("model_out")
    p.add_argument("--seed", type=int)
    p.add_argument("--config", help="JSON config file")
    p.add_argument("--no-smote", action="store_true", help="train without minority oversampling")
    p.set_defaults(fn=cmd_train)

    p = sub.add_parser("eval", help="hold out a test split and report precision/recall/accuracy")
    p.add_argument("dataset")
    p.add_argument("--test-fraction", type=float, default=0.10)
    p.add_argument("--seed", type=int)
    p.add_argument("--config")
    p.add_argument("--no-smote", action="store_true")
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("summarize", help="produce a class-leaning summary of one article")
    p.add_argument("article_file")
    p.add_argument("model")
    p.add_argument("--class", dest="target_class", required=True)
    p.add_argument("--x", type=float, help="class-probability exponent (default from model config)")
    p.add_argument("--max-chars", type=int)
    p.add_argument("--json", action="store_true", help="emit the structured summary document")
    p.add_argument("--out", help="write output to a file instead of stdout")
    p.set_defaults(fn=cmd_summarize)

    p = sub.add_parser("keywords", help="suggest hashtag keywords for an article/class pair")
    p.add_argument("article_file")
    p.add_argument("model")
    p.add_argument("--class", dest="target_class", required=True)
    p.add_argument("--limit", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_keywords)

    p = sub.add_parser("explain", help="per-feature ablation weights for one sentence")
    p.add_argument("model")
    p.add_argument("--sentence", required=True)
    p.add_argument("--class", dest="target_class", required=True)
    p.set_defaults(fn=cmd_explain)

    p = sub.add_parser("drift", help="context drift of a summary against its source article")
    p.add_argument("article_file")
    p.add_argument("summary_file", help="JSON summary document from summarize --json")
    p.add_argument("model")
    p.add_argument("--class", dest="target_class", required=True)
    p.set_defaults(fn=cmd_drift)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (DatasetError, ConfigError, ModelArchiveError, ValueError,
            OSError, json.JSONDecodeError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

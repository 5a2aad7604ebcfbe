import json

import numpy as np
import pytest

from slantsum.cli import main
from synthetic import MARKERS_A, MARKERS_B, make_article, mixed_article


def build_corpus_dir(root):
    """Two-label article directory: one HTML file, the rest plain text."""
    rng = np.random.default_rng(21)
    for label, markers in (("one", MARKERS_A), ("two", MARKERS_B)):
        d = root / label
        d.mkdir(parents=True)
        for i in range(12):
            art = make_article(rng, f"{label}-{i}", label, markers, n_sentences=9)
            if i == 0:
                d.joinpath(f"{i:02d}.html").write_text(
                    f"<html><head><title>T</title></head><body><p>{art.body}</p></body></html>")
            else:
                d.joinpath(f"{i:02d}.txt").write_text(art.body)
    return root


@pytest.fixture
def corpus_dir(tmp_path):
    return build_corpus_dir(tmp_path / "corpus")


@pytest.fixture
def article_file(tmp_path):
    rng = np.random.default_rng(8)
    art = mixed_article(rng, "mix", n_sentences=10)
    path = tmp_path / "article.txt"
    path.write_text(art.body)
    return path


@pytest.fixture(scope="module")
def trained(tmp_path_factory):
    """Dataset and model trained once and shared read-only by this module."""
    root = tmp_path_factory.mktemp("cli")
    corpus = build_corpus_dir(root / "corpus")
    dataset = root / "data.jsonl"
    model = root / "model.json"
    assert main(["ingest", str(corpus), str(dataset)]) == 0
    assert main(["train", str(dataset), str(model), "--seed", "5"]) == 0
    return dataset, model


class TestIngest:
    def test_writes_dataset_and_prints_counts(self, tmp_path, corpus_dir, capsys):
        out = tmp_path / "data.jsonl"
        assert main(["ingest", str(corpus_dir), str(out)]) == 0
        printed = capsys.readouterr().out
        assert "Articles" in printed and "Sentences" in printed
        assert out.exists()
        assert not out.with_name(out.name + ".tmp").exists()

    def test_labels_flag_fixes_order(self, tmp_path, corpus_dir):
        out = tmp_path / "data.jsonl"
        assert main(["ingest", str(corpus_dir), str(out), "--labels", "two,one"]) == 0
        first = json.loads(out.read_text().splitlines()[0])
        assert first["label"] == "two"

    def test_three_label_dirs_rejected(self, tmp_path, corpus_dir, capsys):
        (corpus_dir / "three").mkdir()
        (corpus_dir / "three" / "x.txt").write_text("Stray words here.")
        rc = main(["ingest", str(corpus_dir), str(tmp_path / "n.jsonl")])
        assert rc != 0
        assert "error:" in capsys.readouterr().err

    def test_empty_directory_rejected(self, tmp_path, capsys):
        empty = tmp_path / "empty"
        empty.mkdir()
        assert main(["ingest", str(empty), str(tmp_path / "n.jsonl")]) != 0
        assert "error:" in capsys.readouterr().err


class TestTrain:
    def test_reports_sizes_and_writes_model(self, tmp_path, corpus_dir, capsys):
        dataset = tmp_path / "d.jsonl"
        model = tmp_path / "m.json"
        main(["ingest", str(corpus_dir), str(dataset)])
        assert main(["train", str(dataset), str(model), "--seed", "7"]) == 0
        printed = capsys.readouterr().out
        assert "vocabulary size:" in printed
        assert "after balancing" in printed
        assert model.exists()

    def test_same_seed_identical_bytes(self, tmp_path, trained):
        dataset, model = trained
        again = tmp_path / "model2.json"
        assert main(["train", str(dataset), str(again), "--seed", "5"]) == 0
        assert model.read_bytes() == again.read_bytes()

    def test_missing_dataset_fails(self, tmp_path, capsys):
        rc = main(["train", str(tmp_path / "nope.jsonl"), str(tmp_path / "m.json")])
        assert rc != 0
        assert "error:" in capsys.readouterr().err

    def test_unknown_config_key_named(self, tmp_path, trained, capsys):
        dataset, _ = trained
        cfg = tmp_path / "cfg.json"
        cfg.write_text('{"forest": {"tree_count": 10}}')
        rc = main(["train", str(dataset), str(tmp_path / "m.json"),
                   "--config", str(cfg)])
        assert rc != 0
        assert "tree_count" in capsys.readouterr().err

    def test_failed_train_leaves_no_partial_file(self, tmp_path, corpus_dir):
        dataset = tmp_path / "d.jsonl"
        main(["ingest", str(corpus_dir), str(dataset)])
        target = tmp_path / "missing-dir" / "m.json"
        assert main(["train", str(dataset), str(target)]) != 0
        assert not target.exists()


class TestEval:
    def test_prints_metrics_table(self, trained, capsys):
        dataset, _ = trained
        assert main(["eval", str(dataset), "--seed", "5"]) == 0
        printed = capsys.readouterr().out
        assert "Precision" in printed and "Overall" in printed

    def test_no_smote_flag(self, trained, capsys):
        dataset, _ = trained
        assert main(["eval", str(dataset), "--seed", "5", "--no-smote"]) == 0


class TestSummarize:
    def test_plain_output(self, trained, article_file, capsys):
        _, model = trained
        rc = main(["summarize", str(article_file), str(model), "--class", "one"])
        assert rc == 0
        out = capsys.readouterr().out.strip()
        assert out
        body = article_file.read_text()
        for sentence in out.split(". "):
            assert sentence.split(".")[0] in body

    def test_json_document_schema(self, trained, article_file, capsys):
        _, model = trained
        rc = main(["summarize", str(article_file), str(model),
                   "--class", "one", "--json"])
        assert rc == 0
        doc = json.loads(capsys.readouterr().out)
        assert set(doc) == {"title", "target_class", "char_count", "sentences"}
        assert doc["target_class"] == "one"
        for s in doc["sentences"]:
            assert set(s) == {"position", "text", "class_prob", "base_score",
                              "lwf", "weighted"}

    def test_out_file(self, trained, article_file, tmp_path):
        _, model = trained
        target = tmp_path / "summary.json"
        rc = main(["summarize", str(article_file), str(model), "--class", "one",
                   "--json", "--out", str(target)])
        assert rc == 0
        assert target.exists()
        assert not target.with_name(target.name + ".tmp").exists()
        json.loads(target.read_text())

    def test_max_chars_flag(self, trained, article_file, capsys):
        _, model = trained
        rc = main(["summarize", str(article_file), str(model), "--class", "one",
                   "--max-chars", "120"])
        assert rc == 0
        doc = capsys.readouterr().out.strip()
        assert len(doc) <= 120 or ". " not in doc  # single-sentence escape hatch

    def test_unknown_class_fails(self, trained, article_file, capsys):
        _, model = trained
        rc = main(["summarize", str(article_file), str(model), "--class", "zzz"])
        assert rc != 0
        assert "unknown class" in capsys.readouterr().err


class TestKeywords:
    def test_plain_lines(self, trained, article_file, capsys):
        _, model = trained
        rc = main(["keywords", str(article_file), str(model), "--class", "one"])
        assert rc == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines
        for line in lines:
            if line != "(no keywords)":
                word, score = line.rsplit(None, 1)
                float(score)

    def test_json_and_limit(self, trained, article_file, capsys):
        _, model = trained
        rc = main(["keywords", str(article_file), str(model), "--class", "one",
                   "--limit", "3", "--json"])
        assert rc == 0
        doc = json.loads(capsys.readouterr().out)
        assert len(doc) <= 3
        for k in doc:
            assert set(k) == {"word", "a", "observed", "expected", "d", "score"}


class TestExplainAndDrift:
    def test_explain_table(self, trained, capsys):
        _, model = trained
        rc = main(["explain", str(model), "--sentence",
                   "Alpha00 alpha01 visited the coast.", "--class", "one"])
        assert rc == 0
        printed = capsys.readouterr().out
        assert "Weight" in printed and "Feature" in printed
        assert "alpha00" in printed

    def test_drift_pipeline(self, trained, article_file, tmp_path, capsys):
        _, model = trained
        summary_file = tmp_path / "summary.json"
        assert main(["summarize", str(article_file), str(model), "--class", "one",
                     "--json", "--out", str(summary_file)]) == 0
        rc = main(["drift", str(article_file), str(summary_file), str(model),
                   "--class", "one"])
        assert rc == 0
        printed = capsys.readouterr().out
        assert "drift = " in printed

    def test_drift_rejects_mismatched_summary(self, trained, article_file,
                                              tmp_path, capsys):
        _, model = trained
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"title": "", "target_class": "one",
                                   "char_count": 5,
                                   "sentences": [{"position": 99, "text": "Zz.",
                                                  "class_prob": 0.5, "base_score": 1,
                                                  "lwf": 1.0, "weighted": 1.0}]}))
        rc = main(["drift", str(article_file), str(bad), str(model), "--class", "one"])
        assert rc != 0
        assert "out of range" in capsys.readouterr().err

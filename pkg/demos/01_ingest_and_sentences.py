"""Ingestion walkthrough: markup stripping, sentence splitting, datasets.

Everything downstream works on labeled sentences, so this demo shows the
path from raw files to a saved dataset and back.
"""

import tempfile
from pathlib import Path

from slantsum import build_dataset, load_dataset, save_dataset, split_sentences, strip_markup
from slantsum.corpus import Article

import demo_corpus

print("=" * 70)
print("1. Stripping markup")
print("=" * 70)
page = ("<html><head><title>Harbor notes</title><style>p{margin:0}</style></head>"
        "<body><p>The sloop cleared the breakwater &amp; turned north.</p>"
        "<script>track();</script></body></html>")
print("raw:     ", page[:70], "...")
print("stripped:", strip_markup(page))

print()
print("=" * 70)
print("2. Sentence splitting (rule-based, deterministic)")
print("=" * 70)
tricky = ("Rep. Ada Vale toured the marina on Sept. 6. The slip fees rose 3.5 "
          "percent. Mr. Okafor objected. \"Too steep,\" he said.")
for i, s in enumerate(split_sentences(tricky)):
    print(f"  [{i}] {s}")
print("note: 'Rep.', 'Sept.', 'Mr.' and the decimal in 3.5 do not split.")

print()
print("=" * 70)
print("3. Building and persisting a two-class dataset")
print("=" * 70)
dataset = demo_corpus.build()
print(f"labels: {dataset.labels}")
for lab in dataset.labels:
    n = sum(1 for s in dataset.sentences if s.label == lab)
    arts = len({s.article_id for s in dataset.sentences if s.label == lab})
    print(f"  {lab:<8} {arts} articles, {n} sentences")

with tempfile.TemporaryDirectory() as td:
    path = Path(td) / "desks.jsonl"
    save_dataset(dataset, path)
    print(f"\nfirst two records of {path.name}:")
    for line in path.read_text().splitlines()[:2]:
        print(" ", line)
    reloaded = load_dataset(path)
    print(f"round-trip equality: {reloaded == dataset}")

print()
print("=" * 70)
print("4. Degenerate inputs are handled, not crashed on")
print("=" * 70)
arts = [Article("a", "One sentence here.", source_label="x"),
        Article("b", "", source_label="x"),
        Article("c", "Another one there.", source_label="y")]
ds = build_dataset(arts)
print(f"empty-bodied article skipped; dataset kept {len(ds.sentences)} sentences")

"""Keyword walkthrough: expected-vs-observed scoring for hashtag material.

A word earns a high score for a desk when the article uses it and the
desk's training text over-uses it relative to a class-independent
contingency baseline: score = (occurrences in article) * (observed -
expected occurrences in the class).
"""

from slantsum import AppConfig, fit_pipeline
from slantsum.keywords import expected_counts, recommend

import demo_corpus

pipeline = fit_pipeline(demo_corpus.build(), AppConfig(seed=7))
article = demo_corpus.MIXED_ARTICLE

print("=" * 70)
print("1. The contingency baseline")
print("=" * 70)
stats = pipeline.class_word_stats
expected = expected_counts(stats)
for word in ("summit", "harbor", "trail", "tide"):
    obs = {lab: stats[lab].get(word, 0) for lab in pipeline.classes}
    exp = expected.get(word, {lab: 0.0 for lab in pipeline.classes})
    print(f"  {word:<8} observed {obs}  expected "
          f"{ {lab: round(exp[lab], 1) for lab in pipeline.classes} }")
print("a word splits its expected count by class share; the surplus d is")
print("what the score rewards.")

for target in pipeline.classes:
    print()
    print("=" * 70)
    print(f"2. Top keywords steering toward '{target}'")
    print("=" * 70)
    print(f"{'word':<14} {'a':>3} {'observed':>9} {'expected':>9} {'d':>7} {'score':>8}")
    for k in recommend(article, pipeline, target, limit=10):
        print(f"{k.word:<14} {k.a:>3} {k.observed:>9} {k.expected:>9.2f} "
              f"{k.d:>7.2f} {k.score:>8.2f}")

print()
print("words the training corpus never saw score exactly zero and are")
print("dropped, as are words anticorrelated with the target desk.")

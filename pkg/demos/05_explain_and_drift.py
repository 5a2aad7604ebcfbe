"""Inspection walkthrough: ablation explanations and the drift check.

Feature weights come from zeroing one vector entry at a time; the drift
score is the defensive counterpart to steering: it measures how far a
summary's mean class probability moved from its article's.
"""

from slantsum import AppConfig, SummaryConfig, fit_pipeline, summarize
from slantsum.analysis import drift_score, explain

import demo_corpus

pipeline = fit_pipeline(demo_corpus.build(), AppConfig(seed=7))
article = demo_corpus.MIXED_ARTICLE

print("=" * 70)
print("1. Why does this sentence read 'ridge'?")
print("=" * 70)
sentence = "The climbers hauled anchor chain up the summit trail."
result = explain(sentence, pipeline, "ridge")
print(f"sentence: {sentence}")
print(f"P(ridge) = {result.predicted_prob:.3f}")
print(f"{'Weight':>8}  Feature")
for feat, weight in result.contributions:
    print(f"{weight:>+8.3f}  {feat}")
print("positive weights pull toward 'ridge'; negative ones toward 'harbor'.")

print()
print("=" * 70)
print("2. Drift: steered summaries move away from the article's average")
print("=" * 70)
neutral = summarize(article, pipeline,
                    SummaryConfig("ridge", exponent_x=0.0, max_chars=320, min_chars=0))
steered = summarize(article, pipeline,
                    SummaryConfig("ridge", exponent_x=4.0, max_chars=320, min_chars=0))
for name, summary in (("x=0 (unsteered)", neutral), ("x=4 (steered)", steered)):
    report = drift_score(article, summary, pipeline, "ridge")
    print(f"\n{name}: positions {summary.positions}")
    print(f"  article mean P(ridge) {report.article_mean_prob:.3f}   "
          f"summary mean P(ridge) {report.summary_mean_prob:.3f}   "
          f"drift {report.drift:.3f}")

print()
print("a reader (or platform) comparing a summary against its source can")
print("flag large drift: the steered summary no longer represents the")
print("article's overall stance mix.")

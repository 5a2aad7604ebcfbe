import dataclasses

import pytest

from slantsum import Article
from slantsum.keywords import expected_counts, recommend


class TestExpectedCounts:
    def test_plugging_in_shares(self):
        # n=100 total; word total 10; class total 60 -> E = 100 * 0.1 * 0.6
        stats = {"A": {"xx": 10, "yy": 50}, "B": {"yy": 40}}
        e = expected_counts(stats)
        assert e["xx"]["A"] == pytest.approx(6.0, abs=1e-12)

    def test_symmetric_classes_split_evenly(self):
        stats = {"A": {"zz": 8, "pad": 12}, "B": {"pad": 20}}
        e = expected_counts(stats)
        # classes have equal totals, so a word expects half its count in each
        assert e["zz"]["A"] == pytest.approx(4.0, abs=1e-12)
        assert e["zz"]["B"] == pytest.approx(4.0, abs=1e-12)

    def test_column_sums_recover_class_totals(self):
        stats = {"A": {"aa": 3, "bb": 7, "cc": 2}, "B": {"bb": 4, "dd": 9}}
        e = expected_counts(stats)
        for lab in ("A", "B"):
            total = sum(stats[lab].values())
            col = sum(e[w][lab] for w in e)
            assert col == pytest.approx(total, abs=1e-9)

    def test_empty_stats_error(self):
        with pytest.raises(ValueError, match="empty"):
            expected_counts({"A": {}, "B": {}})


def with_stats(pipeline, stats):
    return dataclasses.replace(pipeline, class_word_stats=stats)


class TestRecommend:
    def test_full_hand_computation(self, small_pipeline):
        # counts A:{x:8, y:2}, B:{x:2, y:8}; article has xx three times
        p = with_stats(small_pipeline,
                       {"one": {"xx": 8, "yy": 2}, "two": {"xx": 2, "yy": 8}})
        art = Article("h", "Xx xx xx today.")
        out = recommend(art, p, "one")
        k = next(s for s in out if s.word == "xx")
        # n=20, p_x=0.5, p_one=0.5, E=5, d=3, score=3*3
        assert k.a == 3
        assert k.observed == 8
        assert k.expected == pytest.approx(5.0, abs=1e-12)
        assert k.d == pytest.approx(3.0, abs=1e-12)
        assert k.score == pytest.approx(9.0, abs=1e-12)

    def test_unknown_words_score_zero_and_drop(self, small_pipeline):
        p = with_stats(small_pipeline, {"one": {"xx": 5}, "two": {"yy": 5}})
        art = Article("u", "Qqq www eee totally unseen words.")
        assert recommend(art, p, "one") == []

    def test_limit_and_ordering(self, small_pipeline):
        stats = {"one": {f"kw{i:02d}": 10 + i for i in range(20)},
                 "two": {"other": 50}}
        p = with_stats(small_pipeline, stats)
        body = " ".join(f"kw{i:02d}" for i in range(20)) + "."
        out = recommend(Article("l", body), p, "one", limit=15)
        assert len(out) == 15
        scores = [k.score for k in out]
        assert scores == sorted(scores, reverse=True)

    def test_alphabetical_tie_break(self, small_pipeline):
        p = with_stats(small_pipeline,
                       {"one": {"zeta": 6, "beta": 6}, "two": {"pad": 12}})
        out = recommend(Article("t", "Zeta beta words."), p, "one")
        assert [k.word for k in out] == ["beta", "zeta"]

    def test_article_count_linearity(self, small_pipeline):
        p = with_stats(small_pipeline,
                       {"one": {"solar": 9, "pad": 1}, "two": {"pad": 10}})
        once = recommend(Article("1", "Solar panel works."), p, "one")
        twice = recommend(Article("2", "Solar solar panel works."), p, "one")
        s1 = next(k for k in once if k.word == "solar")
        s2 = next(k for k in twice if k.word == "solar")
        assert s2.a == 2 * s1.a
        assert s2.score == pytest.approx(2 * s1.score, abs=1e-12)

    def test_class_opposition_under_equal_totals(self, small_pipeline):
        stats = {"one": {"xx": 8, "yy": 2}, "two": {"xx": 2, "yy": 8}}
        p = with_stats(small_pipeline, stats)
        art = Article("o", "Xx appears here.")
        words_one = {k.word for k in recommend(art, p, "one")}
        words_two = {k.word for k in recommend(art, p, "two")}
        assert "xx" in words_one
        assert "xx" not in words_two

    def test_no_stopwords_or_short_tokens(self, small_pipeline):
        stats = {"one": {"the": 50, "aa": 10}, "two": {"pad": 60}}
        p = with_stats(small_pipeline, stats)
        out = recommend(Article("s", "The aa b plan."), p, "one", limit=50)
        words = {k.word for k in out}
        assert "the" not in words
        assert "b" not in words

    def test_negative_scores_excluded_even_when_short(self, small_pipeline):
        # xx is anticorrelated with class two, so its list is empty
        p = with_stats(small_pipeline,
                       {"one": {"xx": 9, "pad": 1}, "two": {"pad": 10}})
        out = recommend(Article("n", "Xx story."), p, "two", limit=15)
        assert all(k.score > 0 for k in out)
        assert "xx" not in {k.word for k in out}

    def test_feature_importance_flag(self, small_pipeline):
        # pick a word the forest actually uses so its importance is nonzero
        imp = small_pipeline.forest.importances
        term, idx = max(((t, i) for t, i in small_pipeline.vocabulary.terms.items()
                         if " " not in t), key=lambda ti: imp[ti[1]])
        stats = {"one": {term: 9, "pad": 1}, "two": {"pad": 10}}
        p = with_stats(small_pipeline, stats)
        art = Article("f", f"{term.capitalize()} report.")
        plain = recommend(art, p, "one")
        scaled = recommend(art, p, "one", use_feature_importance=True)
        k0 = next(k for k in plain if k.word == term)
        k1 = next(k for k in scaled if k.word == term)
        assert k1.score == pytest.approx(k0.score * float(imp[idx]), rel=1e-9)

    def test_unknown_class_rejected(self, small_pipeline):
        with pytest.raises(ValueError, match="unknown class"):
            recommend(Article("x", "Words here."), small_pipeline, "nope")

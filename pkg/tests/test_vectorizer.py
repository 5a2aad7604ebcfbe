import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slantsum.vectorizer import (SparseVector, VectorizerConfig, analyze,
                                 as_csr, fit, ngrams, tokenize, transform)


class TestTokenize:
    def test_hyphens_and_apostrophes_separate(self):
        assert tokenize("Alexandria Ocasio-Cortez's terrible green") == \
            ["alexandria", "ocasio", "cortez", "terrible", "green"]

    def test_all_stopwords(self):
        assert tokenize("the of and") == []

    def test_short_tokens_dropped(self):
        assert tokenize("A b2 c") == ["b2"]

    def test_digits_kept(self):
        assert tokenize("stimulus checks of 1400 dollars") == \
            ["stimulus", "checks", "1400", "dollars"]

    def test_order_preserved(self):
        assert tokenize("zebra yak xerus") == ["zebra", "yak", "xerus"]


class TestNgrams:
    def test_unigram_through_trigram(self):
        assert ngrams(["way", "of", "life"]) == \
            ["way", "of", "life", "way of", "of life", "way of life"]

    def test_empty(self):
        assert ngrams([]) == []

    def test_short_input_no_trigram(self):
        assert ngrams(["a", "b"], 1, 3) == ["a", "b", "a b"]

    def test_bigrams_only(self):
        assert ngrams(["a", "b", "c"], 2, 2) == ["a b", "b c"]

    def test_invalid_range(self):
        with pytest.raises(ValueError):
            ngrams(["a"], 2, 1)
        with pytest.raises(ValueError):
            ngrams(["a"], 0, 2)


class TestAnalyze:
    def test_stopwords_absent_from_ngrams_by_default(self):
        feats = analyze("way of life")
        assert "way of" not in feats
        assert "way life" in feats

    def test_keep_stopwords_in_ngrams_flag(self):
        cfg = VectorizerConfig(keep_stopwords_in_ngrams=True)
        feats = analyze("way of life", cfg)
        assert "way of" in feats and "of life" in feats and "way of life" in feats
        assert "of" not in feats  # unigram stopwords always excluded

    def test_min_token_len_config(self):
        cfg = VectorizerConfig(min_token_len=1)
        assert "b" in analyze("b2 b", cfg)


class TestFit:
    def test_vocabulary_and_df_counts(self):
        vocab = fit(["aa bb", "aa cc"])
        assert set(vocab.terms) == {"aa", "bb", "cc", "aa bb", "aa cc"}
        df = {t: int(vocab.document_frequency[i]) for t, i in vocab.terms.items()}
        assert df["aa"] == 2 and df["bb"] == 1 and df["cc"] == 1

    def test_indices_are_lexicographic_and_dense(self):
        vocab = fit(["zz yy", "xx ww"])
        terms = sorted(vocab.terms)
        assert [vocab.terms[t] for t in terms] == list(range(len(terms)))

    def test_idf_one_when_term_everywhere(self):
        vocab = fit(["aa bb", "aa cc"])
        assert vocab.idf[vocab.terms["aa"]] == pytest.approx(1.0, abs=1e-12)

    def test_single_sentence_idf(self):
        vocab = fit(["xx yy"])
        # ln(2/2) + 1 = 1.0
        assert vocab.idf[vocab.terms["xx"]] == pytest.approx(1.0, abs=1e-12)

    def test_idf_formula(self):
        vocab = fit(["aa bb", "aa cc", "aa dd"])
        i = vocab.terms["bb"]
        assert vocab.idf[i] == pytest.approx(math.log(4 / 2) + 1, abs=1e-12)
        assert np.all(vocab.idf > 0)

    def test_empty_vocabulary_error(self):
        with pytest.raises(ValueError, match="empty vocabulary"):
            fit(["the of", "a an"])

    def test_no_sentences_error(self):
        with pytest.raises(ValueError):
            fit([])

    def test_determinism(self):
        sents = ["aa bb cc", "cc dd", "aa ee ff gg"]
        v1, v2 = fit(sents), fit(sents)
        assert v1.terms == v2.terms
        assert np.array_equal(v1.document_frequency, v2.document_frequency)
        assert np.array_equal(v1.idf, v2.idf)

    def test_df_monotone_under_new_sentence(self):
        base = ["aa bb", "aa cc"]
        v1 = fit(base)
        v2 = fit(base + ["aa dd"])
        t = "aa"
        assert v2.document_frequency[v2.terms[t]] >= v1.document_frequency[v1.terms[t]]
        assert v2.idf[v2.terms[t]] <= v1.idf[v1.terms[t]]


class TestTransform:
    def test_single_known_term_normalizes_to_one(self):
        vocab = fit(["aa bb", "aa cc"])
        v = transform(vocab, "bb bb bb")
        # "bb bb" bigram is not in the vocabulary, so one entry remains
        assert v.entries == [(vocab.terms["bb"], 1.0)]

    def test_counts_times_idf_then_normalized(self):
        vocab = fit(["aa bb", "aa cc"])
        v = transform(vocab, "aa aa bb")
        idf_a = vocab.idf[vocab.terms["aa"]]
        idf_b = vocab.idf[vocab.terms["bb"]]
        raw = {vocab.terms["aa"]: 2 * idf_a, vocab.terms["bb"]: 1 * idf_b}
        # bigram "aa aa" absent from vocab, "aa bb" present with count 1
        raw[vocab.terms["aa bb"]] = vocab.idf[vocab.terms["aa bb"]]
        norm = math.sqrt(sum(x * x for x in raw.values()))
        expect = {i: x / norm for i, x in raw.items()}
        assert dict(v.entries) == pytest.approx(expect)

    def test_out_of_vocabulary_sentence(self):
        vocab = fit(["aa bb"])
        assert len(transform(vocab, "zz qq")) == 0

    def test_feature_set_matches_analyzer_intersection(self):
        sents = ["river stone moss", "stone cliff", "moss fog river"]
        vocab = fit(sents)
        sentence = "river fog unknownword"
        v = transform(vocab, sentence)
        got = {t for t, i in vocab.terms.items() if i in set(v.indices.tolist())}
        expect = set(ngrams(tokenize(sentence))) & set(vocab.terms)
        assert got == expect

    @given(st.lists(st.sampled_from(["river", "stone", "moss", "fog", "cliff"]),
                    min_size=0, max_size=12))
    @settings(max_examples=150, deadline=None)
    def test_norm_is_one_or_empty(self, words):
        vocab = fit(["river stone moss", "stone cliff", "moss fog river"])
        v = transform(vocab, " ".join(words))
        if len(v):
            assert v.norm() == pytest.approx(1.0, abs=1e-9)

    def test_values_finite_sorted_nonzero(self):
        vocab = fit(["aa bb cc dd", "cc dd ee"])
        v = transform(vocab, "aa cc cc ee")
        assert np.all(np.isfinite(v.values))
        assert np.all(np.diff(v.indices) > 0)
        assert np.all(v.values != 0)


class TestSparseVector:
    def test_from_entries_canonicalizes(self):
        v = SparseVector.from_entries([(3, 1.0), (1, 2.0), (3, -1.0), (0, 0.0)])
        assert v.entries == [(1, 2.0)]

    def test_value_at(self):
        v = SparseVector.from_entries([(2, 0.5), (7, 0.25)])
        assert v.value_at(2) == 0.5
        assert v.value_at(3) == 0.0

    def test_equality(self):
        a = SparseVector.from_entries([(1, 1.0), (2, 2.0)])
        b = SparseVector.from_entries([(2, 2.0), (1, 1.0)])
        assert a == b

    def test_as_csr_shape_and_content(self):
        vecs = [SparseVector.from_entries([(0, 1.0)]),
                SparseVector.from_entries([(1, 2.0), (3, 3.0)])]
        m = as_csr(vecs, 4)
        assert m.shape == (2, 4)
        assert m[0, 0] == 1.0 and m[1, 3] == 3.0

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lexsweep import (
    FilterConfig,
    Measure,
    MeasureSpec,
    build_index,
    build_universe,
    document_tfidf_scores,
    extract,
    extract_collection_freq,
    extract_document_freq,
    extract_interdoc_freq,
    extract_tfidf,
    oracle_extract,
    top_fraction,
)

from gencorpus import corpora


@pytest.fixture(scope="module")
def fixture_index(fixture_corpus, config):
    return build_index(fixture_corpus, config)


class TestTopFraction:
    def test_half_of_four(self):
        scored = [("attack", 3.0), ("hostage", 3.0), ("negotiate", 2.0), ("police", 1.0)]
        assert top_fraction(scored, 50) == {"attack", "hostage"}

    def test_hundred_percent_keeps_all(self):
        scored = [("a", 1.0), ("b", 2.0)]
        assert top_fraction(scored, 100) == {"a", "b"}

    def test_tie_broken_by_word(self):
        assert top_fraction([("b", 2.0), ("a", 2.0)], 50) == {"a"}

    def test_cut_rounds_up(self):
        scored = [("a", 3.0), ("b", 2.0), ("c", 1.0)]
        assert top_fraction(scored, 34) == {"a", "b"}
        assert top_fraction(scored, 1) == {"a"}

    def test_empty_input(self):
        assert top_fraction([], 50) == set()

    def test_input_order_irrelevant(self):
        scored = [("c", 1.0), ("a", 3.0), ("b", 2.0)]
        assert top_fraction(scored, 67) == top_fraction(list(reversed(scored)), 67)

    @pytest.mark.parametrize("percent", [0, 101, -5])
    def test_percent_out_of_range(self, percent):
        with pytest.raises(ValueError, match="percent"):
            top_fraction([("a", 1.0)], percent)

    @given(
        scores=st.dictionaries(
            st.text(min_size=1, max_size=4), st.integers(0, 50), max_size=20
        ),
        percent=st.integers(1, 100),
    )
    def test_cut_size_exact(self, scores, percent):
        from fractions import Fraction

        scored = [(word, float(freq)) for word, freq in scores.items()]
        kept = top_fraction(scored, percent)
        assert len(kept) == math.ceil(Fraction(percent, 100) * len(scored))


class TestMeasures:
    def test_collection_freq_fixture(self, fixture_index):
        assert extract_collection_freq(fixture_index, 50) == {"attack", "hostage"}
        assert extract_collection_freq(fixture_index, 1) == {"attack"}
        assert extract_collection_freq(fixture_index, 100) == fixture_index.words

    def test_document_freq_fixture(self, fixture_index):
        assert extract_document_freq(fixture_index, 50) == {
            "attack",
            "hostage",
            "negotiate",
        }
        assert extract_document_freq(fixture_index, 100) == fixture_index.words

    def test_tfidf_fixture(self, fixture_index):
        assert extract_tfidf(fixture_index, 25) == {"attack", "negotiate"}
        assert extract_tfidf(fixture_index, 100) == fixture_index.words

    def test_tfidf_scores_fixture(self, fixture_index):
        scores = {s.word: s.score for s in document_tfidf_scores(fixture_index, "d1")}
        assert scores["attack"] == pytest.approx(3 * math.log(2))
        assert scores["hostage"] == 0.0
        assert scores["police"] == pytest.approx(math.log(2))

    def test_tfidf_zero_iff_word_everywhere(self, fixture_index):
        for doc_id in fixture_index.per_document:
            for s in document_tfidf_scores(fixture_index, doc_id):
                everywhere = fixture_index.doc_counts[s.word] == fixture_index.n_documents
                assert (s.score == 0.0) == everywhere

    def test_interdoc_freq_fixture(self, fixture_index):
        assert extract_interdoc_freq(fixture_index, 2) == {"hostage"}
        assert extract_interdoc_freq(fixture_index, 1) == fixture_index.words
        assert extract_interdoc_freq(fixture_index, 3) == frozenset()

    def test_interdoc_freq_invalid(self, fixture_index):
        with pytest.raises(ValueError, match="min_docs"):
            extract_interdoc_freq(fixture_index, 0)

    def test_dispatch_matches_direct_calls(self, fixture_index):
        assert extract(fixture_index, MeasureSpec(Measure.COLLECTION_FREQ, 50)) == {
            "attack",
            "hostage",
        }
        assert extract(fixture_index, MeasureSpec(Measure.INTERDOC_FREQ, 2)) == {"hostage"}

    def test_single_document_df_equals_cf(self, config):
        import random

        from gencorpus import build_random_corpus

        for seed in range(5):
            corpus = build_random_corpus(random.Random(seed), max_docs=1)
            index = build_index(corpus, config)
            for percent in (1, 25, 50, 75, 100):
                assert extract_document_freq(index, percent) == extract_collection_freq(
                    index, percent
                )

    def test_repeat_calls_identical(self, fixture_index):
        for spec in (
            MeasureSpec(Measure.COLLECTION_FREQ, 37),
            MeasureSpec(Measure.DOCUMENT_FREQ, 37),
            MeasureSpec(Measure.TFIDF, 37),
            MeasureSpec(Measure.INTERDOC_FREQ, 1),
        ):
            assert extract(fixture_index, spec) == extract(fixture_index, spec)


class TestMeasureSpec:
    @pytest.mark.parametrize("kind", [Measure.COLLECTION_FREQ, Measure.DOCUMENT_FREQ, Measure.TFIDF])
    @pytest.mark.parametrize("threshold", [0, 101])
    def test_percent_bounds(self, kind, threshold):
        with pytest.raises(ValueError, match="percent"):
            MeasureSpec(kind, threshold)

    def test_interdoc_bounds(self):
        with pytest.raises(ValueError, match="document count"):
            MeasureSpec(Measure.INTERDOC_FREQ, 0)
        MeasureSpec(Measure.INTERDOC_FREQ, 999)

    def test_labels(self):
        assert Measure.COLLECTION_FREQ.label == "Collection Frequency"
        assert Measure.DOCUMENT_FREQ.label == "Document Frequency"
        assert Measure.TFIDF.label == "tf.idf"
        assert Measure.INTERDOC_FREQ.label == "Inter-document Frequency"
        assert Measure("cf") is Measure.COLLECTION_FREQ

    def test_is_percent(self):
        assert Measure.COLLECTION_FREQ.is_percent
        assert not Measure.INTERDOC_FREQ.is_percent


class TestOracleEquivalence:
    def test_oracle_fixture_spot_checks(self, fixture_corpus, config):
        assert oracle_extract(
            fixture_corpus, config, MeasureSpec(Measure.COLLECTION_FREQ, 50)
        ) == {"attack", "hostage"}
        assert oracle_extract(
            fixture_corpus, config, MeasureSpec(Measure.INTERDOC_FREQ, 2)
        ) == {"hostage"}

    @settings(max_examples=25, deadline=None)
    @given(corpus=corpora())
    def test_oracle_matches_fast_path_everywhere(self, corpus):
        config = FilterConfig()
        index = build_index(corpus, config)
        for kind in Measure:
            thresholds = (
                range(1, 101) if kind.is_percent else range(1, index.n_documents + 2)
            )
            for threshold in thresholds:
                spec = MeasureSpec(kind, threshold)
                assert extract(index, spec) == oracle_extract(corpus, config, spec), (
                    f"{kind.value}@{threshold}"
                )


class TestMonotonicity:
    @settings(max_examples=40, deadline=None)
    @given(corpus=corpora())
    def test_percent_measures_nested(self, corpus):
        config = FilterConfig()
        index = build_index(corpus, config)
        universe = build_universe(corpus, config)
        for kind in (Measure.COLLECTION_FREQ, Measure.DOCUMENT_FREQ, Measure.TFIDF):
            previous: frozenset[str] = frozenset()
            for percent in range(1, 101):
                current = extract(index, MeasureSpec(kind, percent))
                assert previous <= current
                assert current <= universe
                previous = current
            assert previous == universe

    @settings(max_examples=40, deadline=None)
    @given(corpus=corpora())
    def test_interdoc_freq_antitone(self, corpus):
        config = FilterConfig()
        index = build_index(corpus, config)
        universe = build_universe(corpus, config)
        previous = universe
        for min_docs in range(1, index.n_documents + 2):
            current = extract(index, MeasureSpec(Measure.INTERDOC_FREQ, min_docs))
            assert current <= previous
            previous = current
        assert extract(index, MeasureSpec(Measure.INTERDOC_FREQ, 1)) == universe
        assert (
            extract(index, MeasureSpec(Measure.INTERDOC_FREQ, index.n_documents + 1))
            == frozenset()
        )

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from vocabkit import generate_fixture, load_model, normalize_term
from vocabkit.errors import InvalidTermError, ModelFormatError

import oracles


def write_model(path, text):
    path.write_text(text, encoding="utf-8")
    return path


class TestNormalizeTerm:
    @pytest.mark.parametrize("raw,expected", [
        ("Smart Cities", "smart_cities"),
        ("energy", "energy"),
        ("  Smart   Home ", "smart_home"),
        ("a\tb", "a_b"),
        ("UPPER", "upper"),
    ])
    def test_examples(self, raw, expected):
        assert normalize_term(raw) == expected

    @pytest.mark.parametrize("raw", ["", "   ", "\t\n"])
    def test_empty_rejected(self, raw):
        with pytest.raises(InvalidTermError):
            normalize_term(raw)

    @given(st.text(min_size=1).filter(lambda s: s.strip()))
    def test_idempotent(self, raw):
        once = normalize_term(raw)
        assert normalize_term(once) == once


class TestLoadModel:
    def test_plain_file(self, tmp_path):
        path = write_model(tmp_path / "m.txt",
                           "3 4\n"
                           "cat 1 0 0 0\n"
                           "dog 0 2 0 0\n"
                           "eel 0 0 0.5 0.5\n")
        model = load_model(path, "m")
        assert model.vocab_size == 3
        assert model.dimension == 4
        assert set(model.terms) == {"cat", "dog", "eel"}
        # vectors are unit-normalized on load
        assert model.similarity("cat", "cat") == pytest.approx(1.0, abs=1e-6)
        assert model.similarity("eel", "eel") == pytest.approx(1.0, abs=1e-6)

    def test_zero_vector_skipped(self, tmp_path):
        path = write_model(tmp_path / "m.txt",
                           "2 4\n"
                           "cat 0 0 0 0\n"
                           "dog 0 1 0 0\n")
        model = load_model(path, "m")
        assert model.terms == ["dog"]
        assert any("zero vector" in w for w in model.load_warnings)

    def test_duplicate_keeps_first(self, tmp_path):
        path = write_model(tmp_path / "m.txt",
                           "2 2\n"
                           "cat 1 0\n"
                           "CAT 0 1\n")
        model = load_model(path, "m")
        assert model.terms == ["cat"]
        vec = model.vector("cat")
        assert vec is not None and vec[0] == pytest.approx(1.0)

    def test_term_keys_normalized(self, tmp_path):
        path = write_model(tmp_path / "m.txt", "1 2\nSmart_Cities 1 0\n")
        model = load_model(path, "m")
        assert "smart_cities" in model

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_model(tmp_path / "nope.txt", "m")

    @pytest.mark.parametrize("header", ["", "3", "x 4", "3 0", "3 -1", "a b c"])
    def test_malformed_header(self, tmp_path, header):
        path = write_model(tmp_path / "m.txt", f"{header}\ncat 1 0\n")
        with pytest.raises(ModelFormatError):
            load_model(path, "m")

    def test_row_dimension_mismatch_names_line(self, tmp_path):
        path = write_model(tmp_path / "m.txt", "2 3\ncat 1 0 0\ndog 1 0\n")
        with pytest.raises(ModelFormatError) as err:
            load_model(path, "m")
        assert err.value.line_no == 3

    def test_non_numeric_component(self, tmp_path):
        path = write_model(tmp_path / "m.txt", "1 2\ncat 1 oops\n")
        with pytest.raises(ModelFormatError):
            load_model(path, "m")

    def test_non_finite_row_skipped(self, tmp_path):
        path = write_model(tmp_path / "m.txt", "2 2\ncat nan 1\ndog 1 0\n")
        model = load_model(path, "m")
        assert model.terms == ["dog"]

    def test_header_count_mismatch_tolerated(self, tmp_path):
        path = write_model(tmp_path / "m.txt", "5 2\ncat 1 0\n")
        model = load_model(path, "m")
        assert model.vocab_size == 1
        assert any("declared 5" in w for w in model.load_warnings)

    def test_fixture_all_norms_unit(self, tmp_path):
        path = generate_fixture(tmp_path / "f.txt", seed=42, n=100, dim=16, clusters=5)
        model = load_model(path, "f")
        assert model.vocab_size == 100
        for term in model.terms:
            assert abs(np.linalg.norm(model.vector(term)) - 1.0) <= 1e-6

    def test_term_set_preserved_exactly(self, model_paths, registry):
        for mid, path in model_paths.items():
            assert set(registry[mid].terms) == set(oracles.parse_model_file(path))


class TestSimilarity:
    def test_self_cosine(self, registry):
        model = registry["alpha"]
        for term in model.terms[:25]:
            assert abs(model.similarity(term, term) - 1.0) <= 1e-6

    def test_oov_absent(self, registry):
        assert registry["alpha"].similarity("term_000", "never_a_term") is None
        assert registry["alpha"].similarity("never_a_term", "term_000") is None

    def test_matches_oracle(self, registry, raw_vectors):
        model, raw = registry["alpha"], raw_vectors["alpha"]
        rng = np.random.default_rng(0)
        terms = model.terms
        for _ in range(200):
            a, b = rng.choice(terms, size=2)
            assert model.similarity(a, b) == pytest.approx(
                oracles.cosine(raw, a, b), abs=1e-6)

    def test_exactly_symmetric(self, registry):
        model = registry["beta"]
        rng = np.random.default_rng(1)
        terms = model.terms
        for _ in range(200):
            a, b = rng.choice(terms, size=2)
            assert model.similarity(a, b) == model.similarity(b, a)


class TestTopK:
    def test_matches_brute_force(self, registry, raw_vectors):
        model, raw = registry["alpha"], raw_vectors["alpha"]
        got = model.top_k("term_007", 5)
        expected = oracles.brute_force_top_k(raw, "term_007", 5)
        assert [n.term for n in got] == [t for t, _ in expected]
        np.testing.assert_allclose([n.score for n in got],
                                   [s for _, s in expected], atol=1e-9)

    def test_oov_query_empty(self, registry):
        assert registry["alpha"].top_k("never_a_term", 5) == []

    def test_k_exceeding_vocab_saturates(self, tmp_path):
        path = generate_fixture(tmp_path / "f.txt", seed=1, n=10, dim=4, clusters=2)
        model = load_model(path, "f")
        result = model.top_k("term_000", 500)
        assert len(result) == 9
        assert [n.term for n in result] == [
            t for t, _ in oracles.brute_force_top_k(
                oracles.parse_model_file(path), "term_000", 500)]

    def test_full_exclusion_empty(self, registry):
        model = registry["beta"]
        assert model.top_k("term_001", 5, exclude=set(model.terms)) == []

    def test_exclusions_respected(self, registry, raw_vectors):
        model, raw = registry["beta"], raw_vectors["beta"]
        exclude = {"term_010", "term_020", "term_030"}
        got = model.top_k("term_010", 7, exclude=exclude)
        expected = oracles.brute_force_top_k(raw, "term_010", 7, exclude=exclude)
        assert [n.term for n in got] == [t for t, _ in expected]
        assert not exclude & {n.term for n in got}

    def test_tie_broken_by_term_ascending(self, tmp_path):
        # zebra and apple share one vector, so their scores tie exactly
        path = write_model(tmp_path / "m.txt",
                           "3 2\n"
                           "query 1 0\n"
                           "zebra 1 1\n"
                           "apple 1 1\n")
        model = load_model(path, "m")
        result = model.top_k("query", 2)
        assert [n.term for n in result] == ["apple", "zebra"]
        assert result[0].score == result[1].score

    def test_bad_k(self, registry):
        with pytest.raises(ValueError):
            registry["alpha"].top_k("term_000", 0)

    def test_large_fixture_exact_equality(self, tmp_path):
        path = generate_fixture(tmp_path / "big.txt", seed=5, n=2000, dim=16, clusters=25)
        model = load_model(path, "big")
        raw = oracles.parse_model_file(path)
        rng = np.random.default_rng(2)
        for query in rng.choice(model.terms, size=10):
            for k in (1, 10, 100):
                got = model.top_k(query, k)
                expected = oracles.brute_force_top_k(raw, query, k)
                assert [n.term for n in got] == [t for t, _ in expected]


class TestGenerateFixture:
    def test_deterministic_bytes(self, tmp_path):
        p1 = generate_fixture(tmp_path / "a.txt", seed=42, n=100, dim=16, clusters=5)
        p2 = generate_fixture(tmp_path / "b.txt", seed=42, n=100, dim=16, clusters=5)
        assert p1.read_bytes() == p2.read_bytes()

    def test_different_seed_differs(self, tmp_path):
        p1 = generate_fixture(tmp_path / "a.txt", seed=42, n=50, dim=8, clusters=5)
        p2 = generate_fixture(tmp_path / "b.txt", seed=43, n=50, dim=8, clusters=5)
        assert p1.read_bytes() != p2.read_bytes()

    def test_single_cluster_all_positive(self, tmp_path):
        path = generate_fixture(tmp_path / "one.txt", seed=9, n=40, dim=8, clusters=1)
        raw = oracles.parse_model_file(path)
        terms = sorted(raw)
        for i, a in enumerate(terms):
            for b in terms[i + 1:]:
                assert oracles.cosine(raw, a, b) > 0

    def test_clusters_cohere(self, tmp_path):
        path = generate_fixture(tmp_path / "c.txt", seed=12, n=60, dim=16, clusters=3)
        raw = oracles.parse_model_file(path)
        same, cross = [], []
        terms = sorted(raw)
        for i, a in enumerate(terms):
            for b in terms[i + 1:]:
                sim = oracles.cosine(raw, a, b)
                ca, cb = int(a.split("_")[1]) % 3, int(b.split("_")[1]) % 3
                (same if ca == cb else cross).append(sim)
        assert min(same) > max(cross)

    def test_single_term(self, tmp_path):
        path = generate_fixture(tmp_path / "s.txt", seed=4, n=1, dim=4, clusters=1)
        model = load_model(path, "s")
        assert model.vocab_size == 1
        assert model.top_k(model.terms[0], 5) == []

    def test_header_line(self, tmp_path):
        path = generate_fixture(tmp_path / "h.txt", seed=42, n=100, dim=16, clusters=5)
        assert path.read_text(encoding="utf-8").splitlines()[0] == "100 16"

    def test_clusters_must_fit(self, tmp_path):
        with pytest.raises(ValueError):
            generate_fixture(tmp_path / "x.txt", seed=1, n=3, dim=4, clusters=5)

import math
import random
import statistics

import pytest
from hypothesis import given, settings, strategies as st

from newscaster.metrics import (
    CorpusIndex,
    DegenerateCorpusError,
    MetricsError,
    NgdReport,
    UnseenTermError,
    augment_keywords,
    format_report_table,
    group_report,
    ngd,
    pearson,
    round_display,
    segment_answer,
    set_ngd,
)
from newscaster.resources import default_lexicon

LEX = default_lexicon()

# f(a)=3, f(b)=2, f(a,b)=1, N=5 -> [ln3 - ln1] / [ln5 - ln2] = 1.19898 (5 dp)
FIXTURE_DOCS = ["a b", "a", "a", "b", "c"]
FIXTURE_VALUE = (math.log(3) - math.log(1)) / (math.log(5) - math.log(2))


@pytest.fixture(scope="module")
def index():
    return CorpusIndex(FIXTURE_DOCS)


def test_fixture_value_matches_hand_computation(index):
    assert ngd("a", "b", index) == pytest.approx(1.19897, abs=1e-5)
    assert ngd("a", "b", index) == pytest.approx(FIXTURE_VALUE, abs=1e-12)


def test_ngd_identical_terms_zero(index):
    assert ngd("a", "a", index) == 0.0


def test_ngd_symmetric(index):
    for x in ("a", "b", "c"):
        for y in ("a", "b", "c"):
            try:
                left = ngd(x, y, index)
            except MetricsError:
                continue
            assert left == ngd(y, x, index)


def test_ngd_cooccurrence_equal_to_occurrence_is_zero():
    idx = CorpusIndex(["x y", "x y", "z", "w"])
    assert ngd("x", "y", idx) == 0.0


def test_ngd_infinite_when_never_together():
    idx = CorpusIndex(["x", "y", "z"])
    assert math.isinf(ngd("x", "y", idx))


def test_ngd_unseen_term_error(index):
    with pytest.raises(UnseenTermError, match="zzz"):
        ngd("zzz", "a", index)
    with pytest.raises(UnseenTermError, match="zzz"):
        ngd("a", "zzz", index)


def test_ngd_degenerate_corpus():
    idx = CorpusIndex(["x y", "x y"])  # f(x) = N
    with pytest.raises(DegenerateCorpusError):
        ngd("x", "y", idx)


def test_multiword_term_requires_all_words():
    idx = CorpusIndex(["servicios sociales en galicia",
                       "servicios en madrid",
                       "parque infantil"])
    assert idx.doc_count("servicios sociales") == 1
    assert idx.doc_count("servicios") == 2
    assert idx.joint_doc_count("servicios sociales", "galicia") == 1


def test_set_ngd_identical_singletons(index):
    assert set_ngd(["a"], ["a"], index) == 0.0


def test_set_ngd_skips_unseen_terms(index):
    value = set_ngd(["a", "zzz"], ["b"], index)
    assert value == pytest.approx(FIXTURE_VALUE, abs=1e-12)


def test_set_ngd_brute_force_mean():
    docs = ["a b c", "a b", "a c", "b c", "a", "b", "c d"]
    idx = CorpusIndex(docs)
    user, news = ["a", "b"], ["c", "b"]
    expected_values = []
    for u in user:
        for n in news:
            v = ngd(u, n, idx)
            if math.isfinite(v):
                expected_values.append(v)
    expected = sum(expected_values) / len(expected_values)
    assert set_ngd(user, news, idx) == pytest.approx(expected, abs=1e-12)


def test_set_ngd_all_pairs_excluded_is_inf():
    idx = CorpusIndex(["x", "y"])
    assert math.isinf(set_ngd(["x"], ["y"], idx))


def test_set_ngd_empty_list_error(index):
    with pytest.raises(MetricsError):
        set_ngd([], ["a"], index)


def test_segment_answer_golden(lexicon):
    terms = segment_answer("restaurantes buenos, bonitos y baratos", lexicon)
    assert terms == ["restaurante", "bueno", "bonito", "barato"]


def test_segment_answer_all_stopwords(lexicon):
    assert segment_answer("de la y", lexicon) == []


def test_segment_answer_single_word(lexicon):
    assert segment_answer("galicia", lexicon) == ["galicia"]


def test_augment_keywords_category_match(lexicon):
    cats = lexicon.categories
    assert augment_keywords(["perro"], ["gato"], cats, ["x"]) == ["perro"]


def test_augment_keywords_no_match_falls_back():
    cats = {"perro": "animal", "mesa": "object"}
    assert augment_keywords(["mesa"], ["perro"], cats, ["mi respuesta"]) == \
        ["mi respuesta"]


def test_augment_keywords_empty_dialogue_words():
    assert augment_keywords([], ["perro"], {"perro": "animal"}, ["f"]) == ["f"]


def test_augment_keywords_dedup_keeps_first_occurrence():
    cats = {"perro": "animal", "gato": "animal", "vaca": "animal"}
    out = augment_keywords(["perro", "gato", "perro"], ["vaca"], cats, [])
    assert out == ["perro", "gato"]


# --- group report (fixture values from the published tables) -----------------

TABLE_EXPLICIT = {
    1: [0.61, 0.50, 0.55, 0.56, 0.58, 0.58, 0.52],
    2: [0.64, 0.59, 0.60, 0.60, 0.69, 0.62, 0.54, 0.62, 0.63, 0.59, 0.59],
    3: [0.54, 0.31, 0.74, 2.73, 0.56, 2.23, 0.85, 0.57, 0.45, 0.48, 0.49,
        0.48, 0.49],
}
TABLE_AUGMENTED = {
    1: [0.55, 0.46, 0.53, 0.47, 0.49, 0.48, 0.58],
    2: [0.72, 0.69, 0.60, 0.63, 0.52, 0.55, 0.49, 0.56, 0.46, 0.54, 0.52],
    3: [0.51, 0.47, 0.57, 2.00, 0.52, 0.47, 0.75, 0.52, 0.47, 0.58, 0.53,
        0.55, 0.44],
}


def table_report(table, gold=0.47):
    values, groups = {}, {}
    for group, column in table.items():
        for i, v in enumerate(column):
            user = f"g{group}u{i}"
            values[user] = v
            groups[user] = group
    return group_report(values, groups, gold=gold)


def test_group_report_explicit_keywords_table():
    report = table_report(TABLE_EXPLICIT)
    assert [report.display_average(g) for g in (1, 2, 3)] == [0.56, 0.61, 0.84]


def test_group_report_augmented_table():
    report = table_report(TABLE_AUGMENTED)
    assert [report.display_average(g) for g in (1, 2, 3)] == [0.51, 0.57, 0.64]


def test_percent_of_gold_group3_improvement():
    before = table_report(TABLE_EXPLICIT)
    after = table_report(TABLE_AUGMENTED)
    assert before.percent_of_gold(3) == 179
    assert after.percent_of_gold(3) == 136


def test_group_report_single_member():
    report = group_report({"solo": 0.42}, {"solo": 1}, gold=0.47)
    assert report.group_averages[1] == 0.42


def test_group_report_mean_shift_property():
    base = table_report(TABLE_EXPLICIT)
    shifted_values = {u: v + 0.25 for u, v in base.per_user}
    shifted = group_report(shifted_values, base.group_assignments, gold=0.47)
    for g in (1, 2, 3):
        assert shifted.group_averages[g] == pytest.approx(
            base.group_averages[g] + 0.25, abs=1e-12)


def test_group_report_missing_assignment_error():
    with pytest.raises(MetricsError, match="'u2'"):
        group_report({"u1": 0.5, "u2": 0.6}, {"u1": 1}, gold=0.47)


def test_group_report_empty_group_error():
    with pytest.raises(MetricsError, match="group 2"):
        group_report({"u1": 0.5}, {"u1": 1, "ghost": 2}, gold=0.47)


def test_round_display_half_even():
    assert round_display(0.125) == 0.12
    assert round_display(0.135) == 0.14
    assert round_display(0.845) == 0.84


def test_report_table_format():
    text = format_report_table(table_report(TABLE_EXPLICIT))
    lines = text.splitlines()
    assert len(lines) == 3
    assert "0.47" in lines[1]
    assert "179%" in lines[2]


# --- pearson -----------------------------------------------------------------

def test_pearson_perfect_direct():
    assert pearson([1, 2, 3], [1, 2, 3]) == 1.0


def test_pearson_perfect_inverse():
    assert pearson([1, 2, 3], [3, 2, 1]) == -1.0


def test_pearson_hand_value():
    # x=[1,2,3,4], y=[1,3,2,5]: dx*dy sums to 5.5 over sqrt(5 * 8.75)
    assert pearson([1, 2, 3, 4], [1, 3, 2, 5]) == pytest.approx(
        5.5 / math.sqrt(5 * 8.75), abs=1e-12)
    assert round(pearson([1, 2, 3, 4], [1, 3, 2, 5]), 1) == 0.8


def test_pearson_matches_stdlib_oracle_on_random_vectors():
    rng = random.Random(13)
    for _ in range(100):
        n = rng.randrange(3, 30)
        x = [rng.uniform(-50, 50) for _ in range(n)]
        y = [rng.uniform(-50, 50) for _ in range(n)]
        assert pearson(x, y) == pytest.approx(statistics.correlation(x, y),
                                              abs=1e-12)


def test_pearson_length_mismatch():
    with pytest.raises(MetricsError):
        pearson([1, 2], [1, 2, 3])


def test_pearson_too_short():
    with pytest.raises(MetricsError):
        pearson([1], [2])


def test_pearson_constant_vectors():
    with pytest.raises(MetricsError):
        pearson([1, 1, 1], [2, 2, 2])
    with pytest.raises(MetricsError):
        pearson([1, 1, 1], [1, 2, 3])


@settings(max_examples=100, deadline=None)
@given(
    st.lists(st.integers(min_value=-100, max_value=100), min_size=3, max_size=20),
    st.integers(min_value=1, max_value=20),
    st.integers(min_value=-5, max_value=5),
)
def test_pearson_affine_invariance(xi_values, a, b):
    x = [float(v) for v in xi_values]
    if len(set(x)) < 2:
        return
    rng = random.Random(len(x) * 31 + a)
    y = [rng.uniform(-10, 10) for _ in x]
    base = pearson(x, y)
    scaled = pearson([a * xi + b for xi in x], y)
    assert scaled == pytest.approx(base, abs=1e-9)
    flipped = pearson([-a * xi + b for xi in x], y)
    assert flipped == pytest.approx(-base, abs=1e-9)

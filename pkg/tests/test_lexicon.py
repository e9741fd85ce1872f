import pytest
from hypothesis import given, strategies as st

from newscaster.lexicon import (
    Lexicon,
    LexiconError,
    Pos,
    load_lexicon,
    save_lexicon,
    tokenize,
)

MINI_TSV = """\
noticia\tnoun\tnoticia\tf\tsg\t-\t-\t-
noticia\tnoun\tnoticias\tf\tpl\t-\t-\t-
interesante\tadjective\tinteresante\t-\tsg\t-\t-\tpositive
no\tadverb\tno\t-\t-\t-\t-\tdenier
"""


def _write(tmp_path, content, name="lex.tsv"):
    path = tmp_path / name
    path.write_text(content, encoding="utf-8")
    return path


def test_load_fixture_file(tmp_path):
    lex = load_lexicon(_write(tmp_path, MINI_TSV))
    assert len(lex) == 3
    assert lex.lemmatise("noticias") == "noticia"


def test_load_empty_file(tmp_path):
    lex = load_lexicon(_write(tmp_path, ""))
    assert len(lex) == 0
    assert lex.lookup("noticias") == []
    assert lex.lemmatise("noticias") == "noticias"


def test_malformed_row_names_line(tmp_path):
    rows = MINI_TSV.splitlines()
    rows += [
        "bueno\tadjective\tbueno\tm\tsg\t-\t-\tpositive",
        "bueno\tadjective\tbuena\tf\tsg\t-\t-\tpositive",
        "broken row without tabs",
        "mal\tadverb\tmal\t-\t-\t-\t-\tnegative",
    ]
    with pytest.raises(LexiconError, match=r":7"):
        load_lexicon(_write(tmp_path, "\n".join(rows) + "\n"))


def test_duplicate_form_rejected(tmp_path):
    dup = MINI_TSV + "noticia\tnoun\tnoticia\tf\tsg\t-\t-\t-\n"
    with pytest.raises(LexiconError, match="duplicate"):
        load_lexicon(_write(tmp_path, dup))


def test_denier_requires_adverb(tmp_path):
    bad = "malo\tadjective\tmalo\tm\tsg\t-\t-\tdenier\n"
    with pytest.raises(LexiconError, match="denier"):
        load_lexicon(_write(tmp_path, bad))


def test_lemma_must_be_a_form(tmp_path):
    bad = "noticia\tnoun\tnoticias\tf\tpl\t-\t-\t-\n"
    with pytest.raises(LexiconError, match="lemma"):
        load_lexicon(_write(tmp_path, bad))


def test_lemmatise_bundled(lexicon):
    assert lexicon.lemmatise("noticias") == "noticia"
    assert lexicon.lemmatise("interesante") == "interesante"
    assert lexicon.lemmatise("zzz-unknown") == "zzz-unknown"


def test_lemmatise_pos_rank_tiebreak(lexicon):
    # "trabajo" is both a noun and a 1sg verb form; nouns rank first
    assert lexicon.lemmatise("trabajo") == "trabajo"
    assert lexicon.pos_of("trabajo") is Pos.NOUN


def test_stopwords(lexicon):
    assert lexicon.is_stopword("de")
    assert not lexicon.is_stopword("restaurante")
    assert not lexicon.is_stopword("")


def test_polarity_counts(lexicon):
    assert lexicon.polarity_counts(["no", "está", "mal"]) == (1, 0, 1)
    assert lexicon.polarity_counts([]) == (0, 0, 0)
    assert lexicon.polarity_counts(["genial", "genial"]) == (0, 2, 0)


def test_polarity_counts_denier_beats_negative(lexicon):
    neg_adv, pos, neg = lexicon.polarity_counts(["no"])
    assert (neg_adv, pos, neg) == (1, 0, 0)


@given(st.lists(st.sampled_from(
    ["no", "genial", "mal", "bien", "casa", "zzz", "fatal", "de"]), max_size=30))
def test_polarity_counts_additive(tokens):
    lexicon = _BUNDLED
    cut = len(tokens) // 2
    head = lexicon.polarity_counts(tokens[:cut])
    tail = lexicon.polarity_counts(tokens[cut:])
    whole = lexicon.polarity_counts(tokens)
    assert whole == tuple(h + t for h, t in zip(head, tail))


def test_lemmatise_idempotent_over_bundled(lexicon):
    surfaces = [f.surface for e in lexicon.entries for f in e.forms]
    for surface in surfaces:
        once = lexicon.lemmatise(surface)
        assert lexicon.lemmatise(once) == once


def test_save_load_round_trip(tmp_path, lexicon):
    out = tmp_path / "roundtrip.tsv"
    save_lexicon(lexicon, out)
    again = load_lexicon(out)
    original = {(e.lemma, e.pos, e.forms, e.polarity) for e in lexicon.entries}
    reloaded = {(e.lemma, e.pos, e.forms, e.polarity) for e in again.entries}
    assert original == reloaded


def test_tokenize():
    assert tokenize("¿Qué tal, amigo?") == ["qué", "tal", "amigo"]
    assert tokenize("") == []
    assert tokenize("  hola  mundo ") == ["hola", "mundo"]


def test_category_lookup(lexicon):
    assert lexicon.category_of("perro") == "animal"
    assert lexicon.category_of("gato") == "animal"
    assert lexicon.category_of("zzz-unknown") is None


from newscaster.resources import default_lexicon as _default  # noqa: E402

_BUNDLED = _default()

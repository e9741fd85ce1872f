import pytest

from newscaster.patterns import (
    KnowledgeBase,
    PatternError,
    SraiDepthError,
    normalize,
    parse_pattern_file,
)


def kb_of(text: str) -> KnowledgeBase:
    return parse_pattern_file(text)


def test_normalize_strips_punctuation_and_diacritics():
    assert normalize("¿Qué tal estás?") == ["QUE", "TAL", "ESTAS"]
    assert normalize("  hola  ") == ["HOLA"]
    assert normalize("") == []


def test_star_capture_keeps_original_spelling():
    kb = kb_of("<category><pattern>HOLA *</pattern>"
               "<template>Encantado, <star/></template></category>")
    result = kb.match("hola buenos días", seed=0)
    assert result.template_output == "Encantado, buenos días"
    assert result.captures == ["buenos días"]


def test_srai_forwarding():
    kb = kb_of(
        "<category><pattern>QUE TAL</pattern>"
        "<template><srai>COMO ESTAS</srai></template></category>"
        "<category><pattern>COMO ESTAS</pattern>"
        "<template>Bien</template></category>"
    )
    assert kb.match("qué tal", seed=0).template_output == "Bien"


def test_no_match_returns_none():
    kb = kb_of("<category><pattern>HOLA</pattern><template>x</template></category>")
    assert kb.match("adiós", seed=0) is None


def test_underscore_matches_exactly_one_token():
    kb = kb_of("<category><pattern>ME LLAMO _</pattern>"
               "<template>Hola <star/></template></category>")
    assert kb.match("me llamo Ana", seed=0).template_output == "Hola Ana"
    assert kb.match("me llamo Ana María", seed=0) is None


def test_specificity_exact_beats_underscore_beats_star():
    kb = kb_of(
        "<category><pattern>*</pattern><template>wild</template></category>"
        "<category><pattern>_</pattern><template>under</template></category>"
        "<category><pattern>HOLA</pattern><template>exact</template></category>"
    )
    assert kb.match("hola", seed=0).template_output == "exact"
    assert kb.match("otra", seed=0).template_output == "under"
    assert kb.match("dos palabras", seed=0).template_output == "wild"


def test_leftmost_star_takes_longest_span():
    kb = kb_of("<category><pattern>* BIEN *</pattern>"
               "<template>[<star index=\"1\"/>|<star index=\"2\"/>]</template>"
               "</category>")
    result = kb.match("a bien b bien c", seed=0)
    assert result.captures == ["a bien b", "c"]


def test_random_deterministic_under_seed():
    kb = kb_of(
        "<category><pattern>*</pattern><template><random>"
        "<li>Eres una persona muy interesante</li>"
        "<li>Me gustaría conocerte más</li>"
        "<li>Me gustaría saber más de ti</li>"
        "<li>Cuéntame más</li>"
        "</random></template></category>"
    )
    options = {
        "Eres una persona muy interesante",
        "Me gustaría conocerte más",
        "Me gustaría saber más de ti",
        "Cuéntame más",
    }
    first = kb.match("lo que sea", seed=42).template_output
    assert first in options
    for _ in range(5):
        assert kb.match("lo que sea", seed=42).template_output == first


def test_random_frequencies_converge():
    kb = kb_of(
        "<category><pattern>X</pattern><template><random>"
        "<li>a</li><li>b</li><li>c</li><li>d</li>"
        "</random></template></category>"
    )
    counts = {"a": 0, "b": 0, "c": 0, "d": 0}
    n = 10_000
    for seed in range(n):
        counts[kb.match("x", seed=seed).template_output] += 1
    for option, count in counts.items():
        assert abs(count / n - 0.25) <= 0.03, (option, count)


def test_srai_depth_limit_names_chain():
    kb = kb_of(
        "<category><pattern>A</pattern><template><srai>B</srai></template></category>"
        "<category><pattern>B</pattern><template><srai>A</srai></template></category>"
    )
    with pytest.raises(SraiDepthError) as err:
        kb.match("a", seed=0)
    assert "A" in str(err.value) and "B" in str(err.value)


def test_static_srai_target_checked_at_load():
    with pytest.raises(PatternError, match="srai target"):
        kb_of("<category><pattern>A</pattern>"
              "<template><srai>MISSING TARGET</srai></template></category>")


def test_duplicate_pattern_rejected():
    with pytest.raises(PatternError, match="duplicate"):
        kb_of("<category><pattern>A</pattern><template>1</template></category>"
              "<category><pattern>A</pattern><template>2</template></category>")


def test_adjacent_wildcards_rejected():
    with pytest.raises(PatternError, match="adjacent"):
        kb_of("<category><pattern>* *</pattern><template>x</template></category>")


def test_empty_pattern_rejected():
    with pytest.raises(PatternError, match="empty"):
        kb_of("<category><pattern> </pattern><template>x</template></category>")


def test_nested_random_and_srai_compose():
    kb = kb_of(
        "<category><pattern>GRACIAS</pattern><template>De nada</template></category>"
        "<category><pattern>*</pattern><template><random>"
        "<li>Opción. <srai>GRACIAS</srai></li>"
        "<li>Otra</li>"
        "</random></template></category>"
    )
    seen = set()
    for seed in range(20):
        seen.add(kb.match("cualquier cosa", seed=seed).template_output)
    assert seen == {"Opción. De nada", "Otra"}


def test_template_preserves_diacritics():
    kb = kb_of("<category><pattern>COMO ESTAS</pattern>"
               "<template>¿Qué tal estás tú?</template></category>")
    assert kb.match("como estas", seed=0).template_output == "¿Qué tal estás tú?"

"""Three-stage text generation: structure planning, lexicalisation with
function words, and morphological realisation with Spanish orthography.

The planner consults a declarative grammar (phrase type -> constituent
slots); the realiser resolves gender/number/person agreement against the
lexicon and applies contraction and euphony rules (a el -> al, de el ->
del, y -> e before /i/, o -> u before /o/).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from pathlib import Path

from .lexicon import (
    CONTENT_POS,
    Gender,
    Lexicon,
    Number,
    Person,
    Pos,
    Tense,
    strip_diacritics,
    tokenize,
)

OPINION_VERBS = ("considerar", "creer", "pensar", "opinar")

NEGATION_LEMMA = "no"

_SUBJECT_PRONOUNS = {
    (Person.FIRST, Number.SG): "yo",
    (Person.SECOND, Number.SG): "tú",
    (Person.THIRD, Number.SG): "él",
    (Person.FIRST, Number.PL): "nosotros",
    (Person.SECOND, Number.PL): "vosotros",
    (Person.THIRD, Number.PL): "ellos",
}

_CLITIC_PRONOUNS = {
    (Person.FIRST, Number.SG): "me",
    (Person.SECOND, Number.SG): "te",
    (Person.THIRD, Number.SG): "le",
    (Person.FIRST, Number.PL): "nos",
    (Person.SECOND, Number.PL): "os",
    (Person.THIRD, Number.PL): "les",
}

CONTENT_SLOTS = {"NOUN", "VERB", "ADJ", "ADV"}
FUNCTION_SLOTS = {"DET", "PREP", "CONJ", "NEG", "SUBJECT", "CLITIC", "INFINITIVE"}


class UnplannableError(ValueError):
    """No grammatical structure can be built from the given keywords."""


class RealisationError(ValueError):
    def __init__(self, lemma: str, requirements: str):
        self.lemma = lemma
        self.requirements = requirements
        super().__init__(f"no inflected form of {lemma!r} for {requirements}")


@dataclass(frozen=True)
class PronounSpec:
    person: Person
    number: Number
    gender: Gender = Gender.NONE


YO_FRAME = PronounSpec(Person.FIRST, Number.SG)


@dataclass
class Slot:
    role: str
    lemma: str | None = None
    pos: Pos | None = None
    gender: Gender | None = None
    number: Number | None = None
    person: Person | None = None
    tense: Tense | None = None
    fixed_surface: str | None = None


@dataclass
class Phrase:
    kind: str
    parts: list = field(default_factory=list)

    def walk_slots(self):
        for part in self.parts:
            if isinstance(part, Slot):
                yield part
            else:
                yield from part.walk_slots()


@dataclass
class SentencePlan:
    root: Phrase
    sentence_kind: str = "affirmative"   # affirmative | negative | interrogative
    subject: PronounSpec | None = None
    opinion_verb: str = OPINION_VERBS[0]
    content_words: list[tuple[str, Pos]] = field(default_factory=list)


# ---------------------------------------------------------------------------
# grammar


class Grammar:
    """Ordered rewrite rules: phrase kind -> list of constituent sequences."""

    def __init__(self, rules: dict[str, list[list[str]]]):
        self.rules = rules

    def expansions(self, kind: str) -> list[list[str]]:
        return self.rules.get(kind, [])


def load_grammar(path: str | Path) -> Grammar:
    rules: dict[str, list[list[str]]] = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "->" not in line:
            raise ValueError(f"grammar line {lineno}: missing '->'")
        lhs, rhs = line.split("->", 1)
        rules.setdefault(lhs.strip(), []).append(rhs.split())
    return Grammar(rules)


# ---------------------------------------------------------------------------
# stage 1: text planning


_POS_BY_SLOT = {
    "NOUN": Pos.NOUN,
    "VERB": Pos.VERB,
    "ADJ": Pos.ADJECTIVE,
    "ADV": Pos.ADVERB,
    "DET": Pos.DETERMINER,
    "PREP": Pos.PREPOSITION,
    "CONJ": Pos.CONJUNCTION,
}


def plan_text(keywords: list[tuple[str, Pos]], grammar: Grammar,
              lexicon: Lexicon) -> SentencePlan:
    """Infer the phrase structure that consumes the most keywords.

    A copular frame (ser) is injected when adjectives appear without any
    verb, so opinion fragments stay plannable.
    """
    if not keywords:
        raise UnplannableError("no keywords to plan from")
    pool = list(keywords)
    has_verb = any(p is Pos.VERB for _, p in pool)
    has_adj = any(p is Pos.ADJECTIVE for _, p in pool)
    has_noun = any(p is Pos.NOUN for _, p in pool)

    if not has_verb and has_adj and not has_noun:
        pool.insert(0, ("ser", Pos.VERB))
        has_verb = True

    if has_verb:
        kinds = ["verbal"]
    elif has_noun:
        n_nouns = sum(1 for _, p in pool if p is Pos.NOUN)
        kinds = ["coordinated_nominal", "nominal"] if n_nouns >= 2 else ["nominal"]
    else:
        raise UnplannableError(
            "keywords contain neither a verb, a noun nor an adjective"
        )

    best: tuple[int, int, Phrase] | None = None
    for kind in kinds:
        for order, rhs in enumerate(grammar.expansions(kind)):
            built = _try_rule(kind, rhs, list(pool), grammar)
            if built is None:
                continue
            phrase, consumed = built
            key = (-consumed, order)
            if best is None or key < (best[0], best[1]):
                best = (key[0], key[1], phrase)
    if best is None:
        raise UnplannableError(
            f"no grammar rule accommodates keywords {[k for k, _ in keywords]}"
        )
    plan = SentencePlan(root=best[2], content_words=list(keywords))
    return plan


def _take(pool: list, pos: Pos) -> tuple[str, Pos] | None:
    for i, (lemma, p) in enumerate(pool):
        if p is pos:
            return pool.pop(i)
    return None


def _try_rule(kind: str, rhs: list[str], pool: list,
              grammar: Grammar) -> tuple[Phrase, int] | None:
    """Build a phrase for the rule, consuming keywords; None if a content
    slot cannot be filled.  Returns the phrase and keywords consumed."""
    before = len(pool)
    phrase = Phrase(kind=kind)
    for symbol in rhs:
        if symbol in CONTENT_SLOTS:
            taken = _take(pool, _POS_BY_SLOT[symbol])
            if taken is None:
                return None
            phrase.parts.append(Slot(role=symbol, lemma=taken[0], pos=taken[1]))
        elif symbol in FUNCTION_SLOTS:
            taken = _take(pool, _POS_BY_SLOT[symbol]) if symbol in _POS_BY_SLOT else None
            slot = Slot(role=symbol)
            if taken is not None:
                slot.lemma, slot.pos = taken
            phrase.parts.append(slot)
        else:
            # phrase reference: greedily build the best sub-expansion
            sub_best = None
            for order, sub_rhs in enumerate(grammar.expansions(symbol)):
                snapshot = list(pool)
                built = _try_rule(symbol, sub_rhs, snapshot, grammar)
                if built is None:
                    continue
                sub_phrase, consumed = built
                key = (-consumed, order)
                if sub_best is None or key < sub_best[0]:
                    sub_best = (key, sub_phrase, snapshot)
            if sub_best is None:
                return None
            _, sub_phrase, remaining = sub_best
            pool[:] = remaining
            phrase.parts.append(sub_phrase)
    return phrase, before - len(pool)


# ---------------------------------------------------------------------------
# stage 2: sentence planning / lexicalisation


def plan_sentence(plan: SentencePlan, flip_polarity: bool = False,
                  subject: PronounSpec | None = None,
                  opinion_verb: str | None = None,
                  grammar: Grammar | None = None) -> SentencePlan:
    """Insert function words, set polarity, and attach the subject.

    A first-person subject wraps the clause in the opinion frame declared
    by the grammar (SUBJECT VERB CONJ verbal).  Runs the structure pass up
    to three times so newly inserted slots can settle.
    """
    plan = replace(plan, root=_copy_phrase(plan.root))
    if opinion_verb is not None:
        plan.opinion_verb = opinion_verb
    for _ in range(3):
        if not _lexicalise_pass(plan.root):
            break
    if flip_polarity:
        plan.sentence_kind = (
            "negative" if plan.sentence_kind == "affirmative" else "affirmative"
        )
    if plan.sentence_kind == "negative":
        _insert_negation(plan.root)
    else:
        _remove_negation(plan.root)
    plan.subject = subject
    if subject is not None and subject.person is Person.FIRST and subject.number is Number.SG:
        plan.root = _wrap_opinion_frame(plan, grammar)
    elif subject is not None:
        plan.root = Phrase(kind="clause", parts=[
            Slot(role="SUBJECT", lemma=_SUBJECT_PRONOUNS[(subject.person, subject.number)],
                 pos=Pos.PRONOUN, person=subject.person, number=subject.number,
                 gender=subject.gender),
            plan.root,
        ])
    return plan


def _copy_phrase(phrase: Phrase) -> Phrase:
    parts = []
    for part in phrase.parts:
        parts.append(replace(part) if isinstance(part, Slot) else _copy_phrase(part))
    return Phrase(kind=phrase.kind, parts=parts)


def _lexicalise_pass(phrase: Phrase) -> bool:
    """Fill empty function slots with defaults; True when anything changed."""
    changed = False
    for part in phrase.parts:
        if isinstance(part, Phrase):
            changed |= _lexicalise_pass(part)
            continue
        if part.lemma is None:
            if part.role == "DET":
                part.lemma, part.pos = "un", Pos.DETERMINER
                changed = True
            elif part.role == "PREP":
                part.lemma, part.pos = "de", Pos.PREPOSITION
                changed = True
            elif part.role == "CONJ":
                part.lemma, part.pos = "y", Pos.CONJUNCTION
                changed = True
    return changed


def _finite_verb_container(phrase: Phrase) -> tuple[Phrase, int] | None:
    for i, part in enumerate(phrase.parts):
        if isinstance(part, Slot) and part.role == "VERB":
            return phrase, i
        if isinstance(part, Phrase):
            found = _finite_verb_container(part)
            if found is not None:
                return found
    return None


def _insert_negation(root: Phrase) -> None:
    found = _finite_verb_container(root)
    if found is None:
        return
    container, i = found
    already = i > 0 and isinstance(container.parts[i - 1], Slot) \
        and container.parts[i - 1].role == "NEG"
    if not already:
        container.parts.insert(
            i, Slot(role="NEG", lemma=NEGATION_LEMMA, pos=Pos.ADVERB)
        )


def _remove_negation(root: Phrase) -> None:
    root.parts = [p for p in root.parts
                  if not (isinstance(p, Slot) and p.role == "NEG")]
    for part in root.parts:
        if isinstance(part, Phrase):
            _remove_negation(part)


def _wrap_opinion_frame(plan: SentencePlan, grammar: Grammar | None) -> Phrase:
    shape = ["SUBJECT", "VERB", "CONJ", "verbal"]
    if grammar is not None:
        for rhs in grammar.expansions("clause"):
            if "SUBJECT" in rhs:
                shape = rhs
                break
    # the subordinate clause talks about the news item: its verbs stay 3sg
    for slot in plan.root.walk_slots():
        if slot.role == "VERB":
            if slot.person is None:
                slot.person = Person.THIRD
            if slot.number is None:
                slot.number = Number.SG
    parts: list = []
    for symbol in shape:
        if symbol == "SUBJECT":
            parts.append(Slot(role="SUBJECT", lemma="yo", pos=Pos.PRONOUN,
                              person=Person.FIRST, number=Number.SG))
        elif symbol == "VERB":
            parts.append(Slot(role="VERB", lemma=plan.opinion_verb, pos=Pos.VERB,
                              person=Person.FIRST, number=Number.SG,
                              tense=Tense.PRESENT))
        elif symbol == "CONJ":
            parts.append(Slot(role="CONJ", lemma="que", pos=Pos.CONJUNCTION))
        else:
            parts.append(plan.root)
    return Phrase(kind="clause", parts=parts)


# ---------------------------------------------------------------------------
# stage 3: realisation


def _inflect(slot: Slot, lexicon: Lexicon) -> str:
    if slot.fixed_surface is not None:
        return slot.fixed_surface
    if slot.lemma is None:
        raise RealisationError("<empty>", f"unfilled {slot.role} slot")
    if slot.role == "SUBJECT":
        pos = Pos.PRONOUN
    else:
        pos = slot.pos or Pos.OTHER
    entry = lexicon.entry(slot.lemma, pos)
    if entry is None:
        # unknown word: emit as given (keeps generation total for user terms)
        return slot.lemma
    if slot.role == "INFINITIVE":
        form = entry.find_form(Gender.NONE, Number.NONE, Person.NONE, Tense.NONE)
    else:
        form = entry.find_form(slot.gender, slot.number, slot.person, slot.tense)
    if form is None:
        wanted = ", ".join(
            f"{name}={v.value}" for name, v in (
                ("gender", slot.gender), ("number", slot.number),
                ("person", slot.person), ("tense", slot.tense))
            if v is not None
        )
        raise RealisationError(slot.lemma, wanted or "citation form")
    return form.surface


def _resolve_agreement(phrase: Phrase, lexicon: Lexicon,
                       subject: PronounSpec | None) -> None:
    head_entry = None
    for part in phrase.parts:
        if isinstance(part, Slot) and part.role == "NOUN" and part.lemma:
            head_entry = lexicon.entry(part.lemma, Pos.NOUN)
            if part.number is None:
                part.number = Number.SG
            if head_entry is not None and part.gender is None:
                part.gender = head_entry.inherent_gender
            break
    head_gender = head_entry.inherent_gender if head_entry else None
    for part in phrase.parts:
        if isinstance(part, Phrase):
            _resolve_agreement(part, lexicon, subject)
            continue
        if part.role in ("DET", "ADJ") and phrase.kind in ("nominal", "coordinated_nominal"):
            if part.gender is None and head_gender is not None:
                part.gender = head_gender
            if part.number is None:
                part.number = Number.SG
        elif part.role == "ADJ":
            # predicative position: agree with the subject when known
            if part.number is None:
                part.number = subject.number if subject else Number.SG
            if part.gender is None and subject and subject.gender is not Gender.NONE:
                part.gender = subject.gender
        elif part.role == "VERB":
            if part.person is None:
                part.person = subject.person if subject else Person.THIRD
            if part.number is None:
                part.number = subject.number if subject else Number.SG
            if part.tense is None:
                part.tense = Tense.PRESENT


def _starts_with_i(word: str) -> bool:
    plain = strip_diacritics(word.lower())
    return (plain.startswith("i") and not plain.startswith("hie")) \
        or (plain.startswith("hi") and not plain.startswith("hie"))


def _starts_with_o(word: str) -> bool:
    plain = strip_diacritics(word.lower())
    return plain.startswith("o") or plain.startswith("ho")


def apply_orthography(tokens: list[str]) -> list[str]:
    """Spanish contractions and euphonic conjunction swaps."""
    out: list[str] = []
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        nxt = tokens[i + 1] if i + 1 < len(tokens) else None
        if tok == "a" and nxt == "el":
            out.append("al")
            i += 2
            continue
        if tok == "de" and nxt == "el":
            out.append("del")
            i += 2
            continue
        if tok == "y" and nxt is not None and _starts_with_i(nxt):
            out.append("e")
            i += 1
            continue
        if tok == "o" and nxt is not None and _starts_with_o(nxt):
            out.append("u")
            i += 1
            continue
        out.append(tok)
        i += 1
    return out


def realise_tokens(plan: SentencePlan, lexicon: Lexicon) -> list[str]:
    """Inflected surface tokens with orthography applied, no sentence wrap."""
    root = _copy_phrase(plan.root)
    _resolve_agreement(root, lexicon, plan.subject)
    tokens = [_inflect(slot, lexicon) for slot in root.walk_slots()]
    return apply_orthography(tokens)


def realise(plan: SentencePlan, lexicon: Lexicon) -> str:
    """Full sentence: capitalised, punctuated, question-mark wrapped."""
    tokens = realise_tokens(plan, lexicon)
    if not tokens:
        raise RealisationError("<empty>", "plan produced no tokens")
    text = " ".join(tokens)
    text = text[0].upper() + text[1:]
    if plan.sentence_kind == "interrogative":
        return f"¿{text}?"
    return text + "."


def plan_preference_question(verb_lemma: str, experiencer: PronounSpec,
                             activity_lemma: str) -> SentencePlan:
    """Experiencer-verb question of the '¿Te gusta leer?' shape."""
    clitic = _CLITIC_PRONOUNS[(experiencer.person, experiencer.number)]
    root = Phrase(kind="verbal", parts=[
        Slot(role="CLITIC", lemma=clitic, pos=Pos.PRONOUN),
        Slot(role="VERB", lemma=verb_lemma, pos=Pos.VERB,
             person=Person.THIRD, number=Number.SG, tense=Tense.PRESENT),
        Slot(role="INFINITIVE", lemma=activity_lemma, pos=Pos.VERB),
    ])
    return SentencePlan(root=root, sentence_kind="interrogative")


# ---------------------------------------------------------------------------
# opinion replies


def load_templates(path: str | Path) -> dict[str, list[str]]:
    """Predefined reply templates: polarity<TAB>text per line."""
    templates: dict[str, list[str]] = {"positive": [], "negative": [], "neutral": []}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        cells = line.split("\t")
        if len(cells) != 2 or cells[0] not in templates:
            raise ValueError(f"templates line {lineno}: expected polarity<TAB>text")
        templates[cells[0]].append(cells[1])
    return templates


@dataclass(frozen=True)
class OpinionExtraction:
    verb: str
    adjective: str
    adj_gender: Gender | None
    adj_number: Number | None
    negated: bool


def extract_opinion(utterance: str, lexicon: Lexicon) -> OpinionExtraction | None:
    """First verb and first adjective of the utterance, by lexicon lookup.

    The adjective keeps the gender/number its surface form shows so the
    reply echoes the user's agreement; a denier before the verb marks the
    clause as already negated.
    """
    tokens = tokenize(utterance)
    verb = None
    verb_pos = None
    adjective = None
    adj_gender = adj_number = None
    for i, token in enumerate(tokens):
        entries = lexicon.lookup(token)
        if not entries:
            continue
        entry = entries[0]
        if entry.pos is Pos.VERB and verb is None:
            verb, verb_pos = entry.lemma, i
        elif entry.pos is Pos.ADJECTIVE and adjective is None:
            adjective = entry.lemma
            for form in entry.forms:
                if form.surface == token:
                    adj_gender = None if form.gender is Gender.NONE else form.gender
                    adj_number = None if form.number is Number.NONE else form.number
                    break
    if verb is None or adjective is None:
        return None
    negated = False
    for token in tokens[:verb_pos]:
        entries = lexicon.lookup(token)
        if any(e.polarity.value == "denier" for e in entries):
            negated = True
            break
    return OpinionExtraction(verb=verb, adjective=adjective,
                             adj_gender=adj_gender, adj_number=adj_number,
                             negated=negated)


def generate_opinion_reply(user_utterance: str, user_polarity: str, flip: bool,
                           seed: int, lexicon: Lexicon, grammar: Grammar,
                           templates: dict[str, list[str]]) -> str:
    """Contextual opinion echo, or a polarity-matched template when the
    utterance yields no verb/adjective pair.

    The reply frame is 'Yo <opinion-verb> que [no] <verb-3sg> <adjective>';
    the opinion verb is a seeded draw, negation is the user's polarity
    flipped when requested.
    """
    rng = random.Random(seed)
    extraction = extract_opinion(user_utterance, lexicon)
    if extraction is not None:
        try:
            opinion_verb = OPINION_VERBS[rng.randrange(len(OPINION_VERBS))]
            inner = Phrase(kind="verbal", parts=[
                Slot(role="VERB", lemma=extraction.verb, pos=Pos.VERB,
                     person=Person.THIRD, number=Number.SG, tense=Tense.PRESENT),
                Slot(role="ADJ", lemma=extraction.adjective, pos=Pos.ADJECTIVE,
                     gender=extraction.adj_gender, number=extraction.adj_number),
            ])
            plan = SentencePlan(root=inner, sentence_kind="affirmative")
            if extraction.negated:
                plan.sentence_kind = "negative"
            plan = plan_sentence(plan, flip_polarity=flip, subject=YO_FRAME,
                                 opinion_verb=opinion_verb, grammar=grammar)
            tokens = realise_tokens(plan, lexicon)
            text = " ".join(tokens)
            return text[0].upper() + text[1:]
        except RealisationError:
            pass
    target = user_polarity
    if flip:
        target = {"positive": "negative", "negative": "positive"}.get(
            user_polarity, "neutral")
    candidates = templates.get(target) or templates.get("neutral") or ["Entiendo"]
    return candidates[rng.randrange(len(candidates))]

"""Lexical resources: inflection lexicon, polarity lists, stopwords, categories.

All resources are plain UTF-8 files so tests never depend on a proprietary
dictionary.  The lexicon TSV carries one inflected form per row:

    lemma<TAB>pos<TAB>surface<TAB>gender<TAB>number<TAB>person<TAB>tense<TAB>polarity

with ``-`` standing for "not applicable".  Rows sharing (lemma, pos) merge
into a single entry holding the full inflection table.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path


class Pos(Enum):
    NOUN = "noun"
    VERB = "verb"
    ADJECTIVE = "adjective"
    ADVERB = "adverb"
    DETERMINER = "determiner"
    PREPOSITION = "preposition"
    CONJUNCTION = "conjunction"
    PRONOUN = "pronoun"
    OTHER = "other"


# lookup tie-break order: content classes first, then function words
_POS_RANK = {
    Pos.NOUN: 0,
    Pos.VERB: 1,
    Pos.ADJECTIVE: 2,
    Pos.ADVERB: 3,
    Pos.DETERMINER: 4,
    Pos.PREPOSITION: 5,
    Pos.CONJUNCTION: 6,
    Pos.PRONOUN: 7,
    Pos.OTHER: 8,
}

CONTENT_POS = frozenset({Pos.NOUN, Pos.VERB, Pos.ADJECTIVE})


class Gender(Enum):
    M = "m"
    F = "f"
    NONE = "-"


class Number(Enum):
    SG = "sg"
    PL = "pl"
    NONE = "-"


class Person(Enum):
    FIRST = "1"
    SECOND = "2"
    THIRD = "3"
    NONE = "-"


class Tense(Enum):
    PRESENT = "present"
    PAST = "past"
    FUTURE = "future"
    NONE = "-"


class Polarity(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NEUTRAL = "neutral"
    DENIER = "denier"
    NONE = "-"


@dataclass(frozen=True)
class Form:
    surface: str
    gender: Gender = Gender.NONE
    number: Number = Number.NONE
    person: Person = Person.NONE
    tense: Tense = Tense.NONE

    @property
    def features(self) -> tuple[Gender, Number, Person, Tense]:
        return (self.gender, self.number, self.person, self.tense)


@dataclass(frozen=True)
class LexiconEntry:
    lemma: str
    pos: Pos
    forms: tuple[Form, ...]
    polarity: Polarity = Polarity.NONE

    def __post_init__(self) -> None:
        if not self.forms:
            raise LexiconError(f"entry {self.lemma!r} has no forms")
        if self.lemma not in {f.surface for f in self.forms}:
            raise LexiconError(
                f"entry {self.lemma!r}: lemma missing from its own form table"
            )
        seen: set[tuple] = set()
        for f in self.forms:
            if f.features in seen:
                raise LexiconError(
                    f"entry {self.lemma!r}: duplicate feature tuple {f.features}"
                )
            seen.add(f.features)
        if self.polarity is Polarity.DENIER and self.pos is not Pos.ADVERB:
            raise LexiconError(
                f"entry {self.lemma!r}: denier polarity requires adverb pos"
            )

    def find_form(
        self,
        gender: Gender | None = None,
        number: Number | None = None,
        person: Person | None = None,
        tense: Tense | None = None,
    ) -> Form | None:
        """Most specific form compatible with the requested features.

        Gender and number may be satisfied by a form that leaves them
        unspecified (invariant adjectives, number-neutral clitics); person
        and tense must match exactly when requested, so a finite-verb
        request never falls back to the citation form.  Among compatible
        forms the one with the most exact matches wins, earlier rows break
        ties.
        """
        best: Form | None = None
        best_score = -1
        for form in self.forms:
            score = 0
            ok = True
            for want, have, lenient in (
                (gender, form.gender, True),
                (number, form.number, True),
                (person, form.person, False),
                (tense, form.tense, False),
            ):
                if want is None:
                    continue
                if have == want:
                    score += 1
                elif lenient and have.value == "-":
                    continue
                else:
                    ok = False
                    break
            if ok and score > best_score:
                best, best_score = form, score
        return best

    @property
    def inherent_gender(self) -> Gender:
        """Gender a noun imposes on its modifiers (from the singular form)."""
        for form in self.forms:
            if form.number is Number.SG and form.gender is not Gender.NONE:
                return form.gender
        for form in self.forms:
            if form.gender is not Gender.NONE:
                return form.gender
        return Gender.NONE


class LexiconError(ValueError):
    """Malformed lexical resource file."""


class Lexicon:
    """Immutable bundle of all lexical lookups; safe to share across sessions."""

    def __init__(
        self,
        entries: list[LexiconEntry],
        stopwords: frozenset[str] = frozenset(),
        categories: dict[str, str] | None = None,
    ):
        self._entries = tuple(entries)
        self._stopwords = frozenset(stopwords)
        self._categories = dict(categories or {})
        self._by_key: dict[tuple[str, Pos], LexiconEntry] = {}
        self._by_surface: dict[str, list[LexiconEntry]] = {}
        for entry in self._entries:
            key = (entry.lemma, entry.pos)
            if key in self._by_key:
                raise LexiconError(f"duplicate entry for {key}")
            self._by_key[key] = entry
            for form in entry.forms:
                self._by_surface.setdefault(form.surface, []).append(entry)
        for bucket in self._by_surface.values():
            bucket.sort(key=lambda e: (_POS_RANK[e.pos], e.lemma))

    def __len__(self) -> int:
        return len(self._entries)

    @property
    def entries(self) -> tuple[LexiconEntry, ...]:
        return self._entries

    def entry(self, lemma: str, pos: Pos) -> LexiconEntry | None:
        return self._by_key.get((lemma, pos))

    def lookup(self, surface: str) -> list[LexiconEntry]:
        """All entries containing the surface, in pos-rank/lemma order."""
        return list(self._by_surface.get(surface, ()))

    def lemmatise(self, token: str) -> str:
        """Dictionary lemmatisation; unknown tokens pass through unchanged."""
        matches = self._by_surface.get(token)
        if not matches:
            return token
        return matches[0].lemma

    def pos_of(self, token: str) -> Pos | None:
        """Pos of the entry ``lemmatise`` would pick, None when unknown."""
        matches = self._by_surface.get(token)
        if not matches:
            return None
        return matches[0].pos

    def is_stopword(self, token: str) -> bool:
        return token in self._stopwords

    @property
    def stopwords(self) -> frozenset[str]:
        return self._stopwords

    def category_of(self, lemma: str) -> str | None:
        return self._categories.get(lemma)

    @property
    def categories(self) -> dict[str, str]:
        return dict(self._categories)

    def polarity_counts(self, tokens: list[str]) -> tuple[int, int, int]:
        """(denier adverbs, positive words, negative words) over the tokens.

        Each token feeds at most one counter; a denier reading wins over a
        plain negative one.  Repeated tokens count with multiplicity.
        """
        neg_adverbs = pos_words = neg_words = 0
        for token in tokens:
            polarities = {e.polarity for e in self._by_surface.get(token, ())}
            if Polarity.DENIER in polarities:
                neg_adverbs += 1
            elif Polarity.POSITIVE in polarities:
                pos_words += 1
            elif Polarity.NEGATIVE in polarities:
                neg_words += 1
        return neg_adverbs, pos_words, neg_words


def _parse_enum(cls, raw: str, path: str, lineno: int):
    try:
        return cls(raw)
    except ValueError:
        raise LexiconError(
            f"{path}:{lineno}: invalid {cls.__name__.lower()} value {raw!r}"
        ) from None


def load_lexicon(
    path: str | Path,
    stopwords_path: str | Path | None = None,
    categories_path: str | Path | None = None,
) -> Lexicon:
    """Load a lexicon TSV plus optional stopword and category files.

    Raises LexiconError naming the offending line on any malformed row,
    duplicated feature tuple, or polarity conflict within an entry.
    """
    path = Path(path)
    grouped: dict[tuple[str, Pos], list[Form]] = {}
    polarity_by_key: dict[tuple[str, Pos], Polarity] = {}
    order: list[tuple[str, Pos]] = []
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            cells = line.split("\t")
            if len(cells) != 8:
                raise LexiconError(
                    f"{path.name}:{lineno}: expected 8 tab-separated fields, got {len(cells)}"
                )
            lemma, pos_raw, surface, g, n, p, t, pol_raw = cells
            if not lemma or not surface:
                raise LexiconError(f"{path.name}:{lineno}: empty lemma or surface")
            pos = _parse_enum(Pos, pos_raw, path.name, lineno)
            form = Form(
                surface=surface,
                gender=_parse_enum(Gender, g, path.name, lineno),
                number=_parse_enum(Number, n, path.name, lineno),
                person=_parse_enum(Person, p, path.name, lineno),
                tense=_parse_enum(Tense, t, path.name, lineno),
            )
            polarity = _parse_enum(Polarity, pol_raw, path.name, lineno)
            key = (lemma, pos)
            if key not in grouped:
                grouped[key] = []
                polarity_by_key[key] = polarity
                order.append(key)
            elif polarity_by_key[key] != polarity:
                raise LexiconError(
                    f"{path.name}:{lineno}: polarity conflict within entry {lemma!r}"
                )
            if form.features in {f.features for f in grouped[key]}:
                raise LexiconError(
                    f"{path.name}:{lineno}: duplicate form features for entry {lemma!r}"
                )
            grouped[key].append(form)

    entries = [
        LexiconEntry(lemma=k[0], pos=k[1], forms=tuple(grouped[k]),
                     polarity=polarity_by_key[k])
        for k in order
    ]

    stopwords: frozenset[str] = frozenset()
    if stopwords_path is not None:
        stopwords = load_stopwords(stopwords_path)
    categories: dict[str, str] = {}
    if categories_path is not None:
        categories = load_categories(categories_path)
    return Lexicon(entries, stopwords=stopwords, categories=categories)


def load_stopwords(path: str | Path) -> frozenset[str]:
    words = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        token = line.strip()
        if token and not token.startswith("#"):
            words.add(token)
    return frozenset(words)


def load_categories(path: str | Path) -> dict[str, str]:
    path = Path(path)
    categories: dict[str, str] = {}
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        cells = line.split("\t")
        if len(cells) != 2 or not cells[0] or not cells[1]:
            raise LexiconError(f"{path.name}:{lineno}: expected lemma<TAB>category")
        categories[cells[0]] = cells[1]
    return categories


def save_lexicon(lexicon: Lexicon, path: str | Path) -> None:
    """Write entries back to the TSV schema; round-trips through load_lexicon."""
    lines = []
    for entry in lexicon.entries:
        for form in entry.forms:
            lines.append(
                "\t".join(
                    (
                        entry.lemma,
                        entry.pos.value,
                        form.surface,
                        form.gender.value,
                        form.number.value,
                        form.person.value,
                        form.tense.value,
                        entry.polarity.value,
                    )
                )
            )
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def tokenize(text: str) -> list[str]:
    """Lowercase word tokens with diacritics preserved, punctuation dropped."""
    out: list[str] = []
    current: list[str] = []
    for ch in text.lower():
        if ch.isalnum() or ch == "_":
            current.append(ch)
        else:
            if current:
                out.append("".join(current))
                current = []
    if current:
        out.append("".join(current))
    return out


def strip_diacritics(text: str) -> str:
    """Remove combining marks; used for robust pattern matching only."""
    decomposed = unicodedata.normalize("NFD", text)
    return "".join(ch for ch in decomposed if not unicodedata.combining(ch))

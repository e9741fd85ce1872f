"""Abstraction metrics: normalised co-occurrence distance over a local
document index, keyword-answer segmentation, semantic-category
augmentation, per-group averaging and Pearson correlation.

The distance between terms x and y uses document frequencies f(x), f(y),
the joint frequency f(x, y) and the corpus size N:

    [max(log f(x), log f(y)) - log f(x, y)] / [log N - min(log f(x), log f(y))]

Natural logarithms are used; the ratio is base invariant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Decimal
from pathlib import Path
from typing import Protocol

from .lexicon import Lexicon, tokenize


class MetricsError(ValueError):
    pass


class UnseenTermError(MetricsError):
    def __init__(self, term: str):
        self.term = term
        super().__init__(f"term {term!r} does not occur in the corpus")


class DegenerateCorpusError(MetricsError):
    pass


class FrequencyProvider(Protocol):
    def doc_count(self, term: str) -> int: ...

    def joint_doc_count(self, term_a: str, term_b: str) -> int: ...

    def total_docs(self) -> int: ...


class CorpusIndex:
    """Inverted index over documents; a multi-word term occurs in a
    document iff every one of its words occurs there."""

    def __init__(self, documents: list[str], lexicon: Lexicon | None = None):
        self._n = len(documents)
        self._postings: dict[str, set[int]] = {}
        for doc_id, text in enumerate(documents):
            tokens = tokenize(text)
            if lexicon is not None:
                tokens = [lexicon.lemmatise(t) for t in tokens]
            for token in set(tokens):
                self._postings.setdefault(token, set()).add(doc_id)

    @classmethod
    def from_directory(cls, directory: str | Path,
                       lexicon: Lexicon | None = None) -> "CorpusIndex":
        """One UTF-8 text file per document."""
        directory = Path(directory)
        docs = [f.read_text(encoding="utf-8")
                for f in sorted(directory.iterdir()) if f.is_file()]
        return cls(docs, lexicon=lexicon)

    def _docs_for(self, term: str) -> set[int]:
        words = term.split()
        if not words:
            return set()
        sets = [self._postings.get(w, set()) for w in words]
        out = set(sets[0])
        for s in sets[1:]:
            out &= s
        return out

    def doc_count(self, term: str) -> int:
        return len(self._docs_for(term))

    def joint_doc_count(self, term_a: str, term_b: str) -> int:
        return len(self._docs_for(term_a) & self._docs_for(term_b))

    def total_docs(self) -> int:
        return self._n


def ngd(x: str, y: str, fp: FrequencyProvider) -> float:
    """Distance between two terms; 0 for identical terms, inf when they
    never co-occur.  Raises UnseenTermError for zero-frequency terms and
    DegenerateCorpusError when the corpus cannot normalise the value."""
    fx = fp.doc_count(x)
    fy = fp.doc_count(y)
    if fx == 0:
        raise UnseenTermError(x)
    if fy == 0:
        raise UnseenTermError(y)
    if x == y:
        return 0.0
    n = fp.total_docs()
    log_fx, log_fy = math.log(fx), math.log(fy)
    denominator = math.log(n) - min(log_fx, log_fy)
    if denominator <= 0:
        raise DegenerateCorpusError(
            f"corpus size {n} does not exceed min document count {min(fx, fy)}"
        )
    fxy = fp.joint_doc_count(x, y)
    if fxy == 0:
        return math.inf
    return (max(log_fx, log_fy) - math.log(fxy)) / denominator


def set_ngd(user_terms: list[str], news_terms: list[str],
            fp: FrequencyProvider) -> float:
    """Mean pairwise distance over all (user, news) pairs with finite,
    defined values; pairs with unseen terms or no co-occurrence are
    skipped, and inf is returned when nothing qualifies."""
    if not user_terms or not news_terms:
        raise MetricsError("set_ngd requires non-empty term lists")
    values: list[float] = []
    for u in user_terms:
        for n in news_terms:
            try:
                value = ngd(u, n, fp)
            except UnseenTermError:
                continue
            if math.isfinite(value):
                values.append(value)
    if not values:
        return math.inf
    return sum(values) / len(values)


def segment_answer(answer: str, lexicon: Lexicon) -> list[str]:
    """Split a keyword answer into separate search terms: tokenize, drop
    stopwords, lemmatise, keep order."""
    terms = []
    for token in tokenize(answer):
        if lexicon.is_stopword(token):
            continue
        terms.append(lexicon.lemmatise(token))
    return terms


def augment_keywords(dialogue_words: list[str], news_words: list[str],
                     categories: dict[str, str],
                     fallback: list[str]) -> list[str]:
    """Dialogue words whose semantic category matches some news word's
    category (deduplicated, first-appearance order); the fallback terms
    when no category matches."""
    news_categories = {categories[w] for w in news_words if w in categories}
    out: list[str] = []
    for word in dialogue_words:
        cat = categories.get(word)
        if cat is not None and cat in news_categories and word not in out:
            out.append(word)
    return out if out else list(fallback)


def round_display(value: float, places: int = 2) -> float:
    """Half-even rounding used for table display."""
    quant = Decimal(1).scaleb(-places)
    return float(Decimal(repr(value)).quantize(quant, rounding=ROUND_HALF_EVEN))


@dataclass
class NgdReport:
    per_user: list[tuple[str, float]]
    group_assignments: dict[str, int]
    group_averages: dict[int, float]
    gold_standard: float

    def display_average(self, group: int) -> float:
        return round_display(self.group_averages[group])

    def percent_of_gold(self, group: int) -> int:
        """Nearest-integer percentage of the displayed group average over
        the gold standard."""
        return round(self.display_average(group) / self.gold_standard * 100)

    def to_dict(self) -> dict:
        return {
            "gold_standard": self.gold_standard,
            "per_user": [{"user": u, "ngd": v} for u, v in self.per_user],
            "groups": {
                str(g): {
                    "average": self.group_averages[g],
                    "display_average": self.display_average(g),
                    "percent_of_gold": self.percent_of_gold(g),
                }
                for g in sorted(self.group_averages)
            },
        }


def group_report(values: dict[str, float], groups: dict[str, int],
                 gold: float) -> NgdReport:
    """Arithmetic group means of per-user values against a gold standard.

    Every measured user must be assigned a group; a group whose members
    all lack measurements is an error.
    """
    for user in values:
        if user not in groups:
            raise MetricsError(f"user {user!r} has no group assignment")
    members: dict[int, list[float]] = {}
    for user, group in groups.items():
        members.setdefault(group, [])
        if user in values:
            members[group].append(values[user])
    averages: dict[int, float] = {}
    for group in sorted(members):
        if not members[group]:
            raise MetricsError(f"group {group} has no measured members")
        averages[group] = sum(members[group]) / len(members[group])
    return NgdReport(
        per_user=sorted(values.items()),
        group_assignments=dict(groups),
        group_averages=averages,
        gold_standard=gold,
    )


def format_report_table(report: NgdReport) -> str:
    """Aligned plain-text summary table (gold standard plus group rows)."""
    header = ["", "GS"] + [f"Group {g}" for g in sorted(report.group_averages)]
    row = ["Explicit keywords", f"{report.gold_standard:.2f}"] + [
        f"{report.display_average(g):.2f}" for g in sorted(report.group_averages)
    ]
    pct = ["% of gold standard", "100%"] + [
        f"{report.percent_of_gold(g)}%" for g in sorted(report.group_averages)
    ]
    widths = [max(len(a), len(b), len(c)) for a, b, c in zip(header, row, pct)]
    lines = []
    for cells in (header, row, pct):
        lines.append("  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip())
    return "\n".join(lines)


def pearson(x: list[float], y: list[float]) -> float:
    """Pearson correlation between two equal-length vectors.

    Undefined (raises MetricsError) for mismatched lengths, fewer than two
    points, or a zero-variance vector.
    """
    if len(x) != len(y):
        raise MetricsError("vectors differ in length")
    if len(x) < 2:
        raise MetricsError("correlation needs at least two points")
    n = len(x)
    mean_x = sum(x) / n
    mean_y = sum(y) / n
    dx = [xi - mean_x for xi in x]
    dy = [yi - mean_y for yi in y]
    ss_x = sum(d * d for d in dx)
    ss_y = sum(d * d for d in dy)
    if ss_x == 0 and ss_y == 0:
        raise MetricsError("both vectors are constant; correlation undefined")
    if ss_x == 0 or ss_y == 0:
        raise MetricsError("zero variance vector; correlation undefined")
    return sum(a * b for a, b in zip(dx, dy)) / math.sqrt(ss_x * ss_y)

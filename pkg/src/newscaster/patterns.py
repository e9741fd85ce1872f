"""Pattern-language interpreter for the scripted dialogue turns.

Supports the category/pattern/template subset with ``*`` (one or more
tokens), ``_`` (exactly one token), ``<star/>`` back-references,
``<srai>`` redirection and ``<random>`` alternatives.  Matching is done on
uppercased, punctuation-free, diacritic-stripped tokens; template text and
captured spans keep their original spelling.
"""

from __future__ import annotations

import random
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from pathlib import Path

from .lexicon import strip_diacritics

SRAI_DEPTH_LIMIT = 16

_PUNCT_STRIP = str.maketrans(
    {c: " " for c in "\"'`´’‘“”.,;:!¡?¿()[]{}<>-—–_/\\|@#$%^&*+=~"}
)


class PatternError(ValueError):
    """Malformed pattern file or knowledge base."""


class SraiDepthError(RuntimeError):
    """srai recursion exceeded the depth limit; names the chain followed."""

    def __init__(self, chain: list[str]):
        self.chain = list(chain)
        super().__init__(
            "srai depth limit exceeded: " + " -> ".join(self.chain)
        )


# template tree nodes
@dataclass(frozen=True)
class Text:
    text: str


@dataclass(frozen=True)
class Star:
    index: int = 1


@dataclass(frozen=True)
class Srai:
    children: tuple = ()


@dataclass(frozen=True)
class RandomChoice:
    alternatives: tuple = ()  # tuple of node tuples


@dataclass(frozen=True)
class PatternCategory:
    pattern: tuple[str, ...]
    template: tuple


def normalize(utterance: str) -> list[str]:
    """Matching tokens: uppercase, punctuation and diacritics removed."""
    cleaned = strip_diacritics(utterance).upper().translate(_PUNCT_STRIP)
    return cleaned.split()


def _original_tokens(utterance: str) -> list[str]:
    """Tokens aligned 1:1 with normalize(), original spelling kept."""
    return utterance.translate(_PUNCT_STRIP).split()


def _parse_template(elem: ET.Element) -> tuple:
    """Flatten an element's mixed content into a template node tuple."""
    nodes: list = []
    if elem.text and elem.text.strip():
        nodes.append(Text(" ".join(elem.text.split())))
    for child in elem:
        tag = child.tag.lower()
        if tag == "star":
            nodes.append(Star(int(child.get("index", "1"))))
        elif tag == "srai":
            nodes.append(Srai(_parse_template(child)))
        elif tag == "random":
            alts = []
            for li in child:
                if li.tag.lower() != "li":
                    raise PatternError("random node may only contain <li>")
                alts.append(_parse_template(li))
            if not alts:
                raise PatternError("random node with no alternatives")
            nodes.append(RandomChoice(tuple(alts)))
        else:
            raise PatternError(f"unsupported template tag <{tag}>")
        if child.tail and child.tail.strip():
            nodes.append(Text(" ".join(child.tail.split())))
    return tuple(nodes)


def _static_text(nodes: tuple) -> str | None:
    """Template content as plain text when it holds no dynamic nodes."""
    parts = []
    for node in nodes:
        if isinstance(node, Text):
            parts.append(node.text)
        else:
            return None
    return " ".join(" ".join(parts).split())


class KnowledgeBase:
    """Ordered, validated collection of pattern categories."""

    def __init__(self, categories: list[PatternCategory]):
        self.categories = list(categories)
        self._validate()

    def _validate(self) -> None:
        seen: set[tuple[str, ...]] = set()
        for cat in self.categories:
            if not cat.pattern:
                raise PatternError("empty pattern")
            for a, b in zip(cat.pattern, cat.pattern[1:]):
                if a in ("*", "_") and b in ("*", "_"):
                    raise PatternError(
                        f"adjacent wildcards in pattern {' '.join(cat.pattern)!r}"
                    )
            if cat.pattern in seen:
                raise PatternError(
                    f"duplicate pattern {' '.join(cat.pattern)!r}"
                )
            seen.add(cat.pattern)
        # static srai targets must resolve to some category now
        for cat in self.categories:
            self._check_srai(cat.template, cat.pattern)

    def _check_srai(self, nodes: tuple, origin: tuple[str, ...]) -> None:
        for node in nodes:
            if isinstance(node, Srai):
                target = _static_text(node.children)
                if target is not None:
                    tokens = normalize(target)
                    if self._find(tokens) is None:
                        raise PatternError(
                            f"srai target {target!r} in pattern "
                            f"{' '.join(origin)!r} matches no category"
                        )
                self._check_srai(node.children, origin)
            elif isinstance(node, RandomChoice):
                for alt in node.alternatives:
                    self._check_srai(alt, origin)

    def _find(self, tokens: list[str]) -> tuple[PatternCategory, list[tuple[int, int]]] | None:
        """Most specific category for the tokens plus wildcard spans.

        Specificity compares, input position by input position, how the
        token was consumed: an exact token beats ``_`` which beats ``*``
        (the first differing position decides, file order breaks ties).
        Within one pattern the leftmost ``*`` takes the longest span that
        still lets the rest of the pattern match.
        """
        best: tuple[PatternCategory, list[tuple[int, int]]] | None = None
        best_key: tuple | None = None
        for idx, cat in enumerate(self.categories):
            outcome = _match_pattern(cat.pattern, tokens)
            if outcome is None:
                continue
            spans, trace = outcome
            key = (trace, idx)
            if best_key is None or key < best_key:
                best, best_key = (cat, spans), key
        return best

    def match(self, utterance: str, seed: int | None = None,
              rng: random.Random | None = None) -> "MatchResult | None":
        """Evaluate the best category for the utterance, or None.

        ``seed`` (or an explicit ``rng``) resolves <random> draws, making
        the whole evaluation deterministic.
        """
        tokens = normalize(utterance)
        originals = _original_tokens(utterance)
        found = self._find(tokens)
        if found is None:
            return None
        cat, spans = found
        captures = [" ".join(originals[a:b]) for a, b in spans]
        if rng is None:
            rng = random.Random(seed)
        out = self._evaluate(cat.template, captures, rng, [" ".join(cat.pattern)])
        return MatchResult(template_output=out, captures=captures)

    def _evaluate(self, nodes: tuple, captures: list[str],
                  rng: random.Random, chain: list[str]) -> str:
        parts: list[str] = []
        for node in nodes:
            if isinstance(node, Text):
                parts.append(node.text)
            elif isinstance(node, Star):
                if 1 <= node.index <= len(captures):
                    parts.append(captures[node.index - 1])
            elif isinstance(node, RandomChoice):
                alt = rng.choice(node.alternatives)
                parts.append(self._evaluate(alt, captures, rng, chain))
            elif isinstance(node, Srai):
                inner = self._evaluate(node.children, captures, rng, chain)
                if len(chain) >= SRAI_DEPTH_LIMIT:
                    raise SraiDepthError(chain + [inner])
                tokens = normalize(inner)
                found = self._find(tokens)
                if found is None:
                    parts.append(inner)
                    continue
                cat, spans = found
                originals = _original_tokens(inner)
                caps = [" ".join(originals[a:b]) for a, b in spans]
                parts.append(
                    self._evaluate(cat.template, caps, rng,
                                   chain + [" ".join(cat.pattern)])
                )
        return " ".join(p for p in parts if p).strip()


@dataclass(frozen=True)
class MatchResult:
    template_output: str
    captures: list[str] = field(default_factory=list)


# per-token consumption kinds, ordered by specificity
_EXACT, _ONE, _MANY = 0, 1, 2


def _match_pattern(pattern: tuple[str, ...], tokens: list[str]
                   ) -> tuple[list[tuple[int, int]], tuple[int, ...]] | None:
    """Wildcard spans and per-input-token consumption trace, or None.

    The trace holds, for every input token, whether an exact word (0),
    ``_`` (1) or ``*`` (2) consumed it.  The star search is longest-first
    so the leftmost star grabs the longest viable span.
    """

    def rec(pi: int, ti: int):
        if pi == len(pattern):
            return ([], []) if ti == len(tokens) else None
        item = pattern[pi]
        if item == "*":
            # longest-first: try consuming all remaining tokens down to one
            for end in range(len(tokens), ti, -1):
                rest = rec(pi + 1, end)
                if rest is not None:
                    spans, trace = rest
                    return ([(ti, end)] + spans, [_MANY] * (end - ti) + trace)
            return None
        if item == "_":
            if ti < len(tokens):
                rest = rec(pi + 1, ti + 1)
                if rest is not None:
                    spans, trace = rest
                    return ([(ti, ti + 1)] + spans, [_ONE] + trace)
            return None
        if ti < len(tokens) and tokens[ti] == item:
            rest = rec(pi + 1, ti + 1)
            if rest is not None:
                spans, trace = rest
                return (spans, [_EXACT] + trace)
        return None

    outcome = rec(0, 0)
    if outcome is None:
        return None
    spans, trace = outcome
    return spans, tuple(trace)


def _pattern_tokens(text: str) -> tuple[str, ...]:
    """Pattern tokens with wildcards preserved, words normalized."""
    out: list[str] = []
    for raw in text.split():
        if raw in ("*", "_"):
            out.append(raw)
        else:
            out.extend(normalize(raw))
    return tuple(out)


def parse_pattern_file(text: str, source: str = "<string>") -> KnowledgeBase:
    """Parse the restricted XML dialect into a KnowledgeBase."""
    try:
        root = ET.fromstring(f"<kb>{text}</kb>")
    except ET.ParseError as exc:
        raise PatternError(f"{source}: invalid XML: {exc}") from None
    categories: list[PatternCategory] = []
    for elem in root:
        if elem.tag.lower() != "category":
            raise PatternError(f"{source}: unexpected top-level <{elem.tag}>")
        pat_elem = elem.find("pattern")
        tpl_elem = elem.find("template")
        if pat_elem is None or tpl_elem is None:
            raise PatternError(f"{source}: category lacks pattern or template")
        pattern = _pattern_tokens(pat_elem.text or "")
        template = _parse_template(tpl_elem)
        categories.append(PatternCategory(pattern=pattern, template=template))
    return KnowledgeBase(categories)


def load_knowledge_base(path: str | Path) -> KnowledgeBase:
    path = Path(path)
    return parse_pattern_file(path.read_text(encoding="utf-8"), source=path.name)

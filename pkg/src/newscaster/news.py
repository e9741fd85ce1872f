"""News ingestion: remote JSON endpoint or local fixture directory, with an
append-only JSONL cache and keyword extraction over headline + lead."""

from __future__ import annotations

import json
import os
import urllib.error
import urllib.request
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path
from threading import Lock

from .lexicon import CONTENT_POS, Lexicon, tokenize

ENDPOINT_ENV_VAR = "NEWSCASTER_NEWS_URL"


class Topic(Enum):
    ACCESSIBILITY = "accessibility"
    ENVIRONMENT = "environment"
    HEALTH = "health"
    LEISURE = "leisure"
    PUBLIC_SERVICES = "public_services"
    RETIREMENT = "retirement"
    SOCIAL_SERVICES = "social_services"
    SPORT = "sport"
    TECHNOLOGY = "technology"
    TRANSPORT = "transport"


class NewsTransportError(RuntimeError):
    """Endpoint unreachable; callers may fall back to the cache."""


class NewsParseError(ValueError):
    """Payload did not match the expected schema; names the item index."""


@dataclass(frozen=True)
class NewsItem:
    id: str
    topic: Topic
    headline: str
    lead: str
    body: str = ""
    published_at: datetime = field(
        default_factory=lambda: datetime.fromtimestamp(0, tz=timezone.utc))
    keywords: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "topic": self.topic.value,
            "headline": self.headline,
            "lead": self.lead,
            "body": self.body,
            "published_at": self.published_at.isoformat(),
            "keywords": list(self.keywords),
        }


def _parse_item(obj: dict, index: int) -> NewsItem:
    try:
        topic = Topic(obj["topic"])
        headline = obj["headline"]
        if not headline:
            raise ValueError("empty headline")
        published = datetime.fromisoformat(obj["published_at"])
        if published.tzinfo is None:
            published = published.replace(tzinfo=timezone.utc)
        return NewsItem(
            id=str(obj["id"]),
            topic=topic,
            headline=headline,
            lead=obj.get("lead", ""),
            body=obj.get("body", ""),
            published_at=published,
            keywords=tuple(obj.get("keywords", ())),
        )
    except (KeyError, ValueError, TypeError) as exc:
        raise NewsParseError(f"item {index}: {exc}") from None


def parse_payload(payload: object) -> list[NewsItem]:
    if not isinstance(payload, list):
        raise NewsParseError("payload must be a JSON array of items")
    return [_parse_item(obj, i) for i, obj in enumerate(payload)]


@dataclass(frozen=True)
class FetchResult:
    items: list[NewsItem]
    stale: bool = False


class NewsStore:
    """Append-only JSONL cache keyed by item id; the newest record wins.

    Writers are serialized by a lock, readers materialise a snapshot.
    """

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._lock = Lock()

    def append(self, items: list[NewsItem]) -> None:
        with self._lock:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a", encoding="utf-8") as fh:
                for item in items:
                    fh.write(json.dumps(item.to_dict(), ensure_ascii=False) + "\n")

    def load(self) -> list[NewsItem]:
        """All cached items, newest first."""
        if not self.path.exists():
            return []
        by_id: dict[str, NewsItem] = {}
        for i, line in enumerate(self.path.read_text(encoding="utf-8").splitlines()):
            if not line.strip():
                continue
            by_id_item = _parse_item(json.loads(line), i)
            by_id[by_id_item.id] = by_id_item
        return sorted(by_id.values(), key=lambda it: it.published_at, reverse=True)


def _read_source(source: str, timeout: float) -> object:
    """JSON payload from a URL, a directory of *.json files, or one file."""
    path = Path(source)
    if source.startswith(("http://", "https://")):
        try:
            with urllib.request.urlopen(source, timeout=timeout) as resp:
                return json.load(resp)
        except (urllib.error.URLError, OSError, TimeoutError) as exc:
            raise NewsTransportError(f"cannot reach {source}: {exc}") from None
    if path.is_dir():
        payload: list = []
        for file in sorted(path.glob("*.json")):
            part = json.loads(file.read_text(encoding="utf-8"))
            if not isinstance(part, list):
                raise NewsParseError(f"{file.name}: payload must be a JSON array")
            payload.extend(part)
        return payload
    if path.is_file():
        return json.loads(path.read_text(encoding="utf-8"))
    raise NewsTransportError(f"source {source!r} is neither a URL nor a path")


def fetch_news(source: str, topic: Topic | None = None, limit: int | None = None,
               store: NewsStore | None = None, timeout: float = 5.0) -> FetchResult:
    """Fetch, filter by topic, newest first; cache into the store.

    On transport failure a warm cache answers with ``stale=True``; with no
    cache the transport error propagates.
    """
    source = os.environ.get(ENDPOINT_ENV_VAR, "") or source
    try:
        payload = _read_source(source, timeout)
    except NewsTransportError:
        if store is not None:
            cached = store.load()
            if cached:
                return FetchResult(items=_filter(cached, topic, limit), stale=True)
        raise
    items = parse_payload(payload)
    items.sort(key=lambda it: it.published_at, reverse=True)
    if store is not None:
        store.append(items)
    return FetchResult(items=_filter(items, topic, limit), stale=False)


def _filter(items: list[NewsItem], topic: Topic | None,
            limit: int | None) -> list[NewsItem]:
    if topic is not None:
        items = [it for it in items if it.topic is topic]
    if limit is not None:
        items = items[:max(limit, 0)]
    return items


def extract_keywords(item: NewsItem, lexicon: Lexicon, k: int = 5) -> list[str]:
    """Top-k content lemmas of headline + lead.

    Stopwords dropped, tokens lemmatised; known tokens survive only with
    noun/verb/adjective readings, unknown ones pass through.  Ranked by
    frequency, then first occurrence.
    """
    counts: dict[str, int] = {}
    first_seen: dict[str, int] = {}
    position = 0
    for token in tokenize(item.headline + " " + item.lead):
        position += 1
        if lexicon.is_stopword(token):
            continue
        pos = lexicon.pos_of(token)
        if pos is not None and pos not in CONTENT_POS:
            continue
        lemma = lexicon.lemmatise(token)
        counts[lemma] = counts.get(lemma, 0) + 1
        first_seen.setdefault(lemma, position)
    ranked = sorted(counts, key=lambda l: (-counts[l], first_seen[l]))
    return ranked[:k]


def with_keywords(item: NewsItem, lexicon: Lexicon, k: int = 5) -> NewsItem:
    return replace(item, keywords=tuple(extract_keywords(item, lexicon, k)))

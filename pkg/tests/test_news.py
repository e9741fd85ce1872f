import json
import threading
from datetime import datetime, timezone
from http.server import BaseHTTPRequestHandler, HTTPServer

import pytest
from hypothesis import given, settings, strategies as st

from newscaster.news import (
    NewsItem,
    NewsParseError,
    NewsStore,
    NewsTransportError,
    Topic,
    extract_keywords,
    fetch_news,
    parse_payload,
    with_keywords,
)
from newscaster.resources import default_lexicon

LEX = default_lexicon()

PAYLOAD = [
    {"id": "a1", "topic": "health", "headline": "Una vacuna nueva",
     "lead": "La campaña empieza hoy.", "body": "",
     "published_at": "2021-04-10T08:00:00+00:00"},
    {"id": "a2", "topic": "sport", "headline": "El equipo gana",
     "lead": "Victoria en casa.", "body": "",
     "published_at": "2021-04-11T08:00:00+00:00"},
    {"id": "a3", "topic": "transport", "headline": "Nuevo autobús",
     "lead": "Más horarios.", "body": "",
     "published_at": "2021-04-12T08:00:00+00:00"},
]


def write_fixture(tmp_path, payload):
    src = tmp_path / "feed"
    src.mkdir()
    (src / "items.json").write_text(json.dumps(payload), encoding="utf-8")
    return str(src)


def test_fetch_filters_by_topic(tmp_path):
    source = write_fixture(tmp_path, PAYLOAD)
    result = fetch_news(source, topic=Topic.HEALTH)
    assert [it.id for it in result.items] == ["a1"]
    assert not result.stale


def test_fetch_newest_first(tmp_path):
    source = write_fixture(tmp_path, PAYLOAD)
    result = fetch_news(source)
    assert [it.id for it in result.items] == ["a3", "a2", "a1"]


def test_fetch_limit_zero(tmp_path):
    source = write_fixture(tmp_path, PAYLOAD)
    assert fetch_news(source, limit=0).items == []


def test_malformed_payload_names_item_index():
    broken = [dict(PAYLOAD[0]), {"id": "x", "topic": "nope",
                                 "headline": "h", "lead": "",
                                 "published_at": "2021-01-01T00:00:00+00:00"}]
    with pytest.raises(NewsParseError, match="item 1"):
        parse_payload(broken)


def test_empty_headline_rejected():
    bad = [dict(PAYLOAD[0], headline="")]
    with pytest.raises(NewsParseError, match="item 0"):
        parse_payload(bad)


class _Handler(BaseHTTPRequestHandler):
    payload: list = []

    def do_GET(self):
        body = json.dumps(self.payload).encode()
        self.send_response(200)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def log_message(self, *args):
        pass


@pytest.fixture()
def stub_server():
    handler = type("Handler", (_Handler,), {"payload": PAYLOAD})
    server = HTTPServer(("127.0.0.1", 0), handler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{server.server_port}/news"
    server.shutdown()


def test_fetch_from_http_endpoint(stub_server, tmp_path):
    store = NewsStore(tmp_path / "cache.jsonl")
    result = fetch_news(stub_server, store=store)
    assert len(result.items) == 3
    assert not result.stale
    assert len(store.load()) == 3


def test_unreachable_endpoint_with_warm_cache(stub_server, tmp_path):
    store = NewsStore(tmp_path / "cache.jsonl")
    fetch_news(stub_server, store=store)  # warm the cache
    dead = "http://127.0.0.1:1/news"
    result = fetch_news(dead, store=store)
    assert result.stale
    assert [it.id for it in result.items] == ["a3", "a2", "a1"]


def test_unreachable_endpoint_cold_cache_raises(tmp_path):
    store = NewsStore(tmp_path / "cache.jsonl")
    with pytest.raises(NewsTransportError):
        fetch_news("http://127.0.0.1:1/news", store=store)


def test_cache_newest_record_wins(tmp_path):
    store = NewsStore(tmp_path / "cache.jsonl")
    first = parse_payload(PAYLOAD)
    store.append(first)
    updated = parse_payload([dict(PAYLOAD[0], headline="Titular corregido")])
    store.append(updated)
    items = {it.id: it for it in store.load()}
    assert items["a1"].headline == "Titular corregido"
    assert len(items) == 3


def test_fetch_idempotent_against_cache(tmp_path):
    source = write_fixture(tmp_path, PAYLOAD)
    store = NewsStore(tmp_path / "cache.jsonl")
    fetch_news(source, store=store)
    fetch_news(source, store=store)
    assert len(store.load()) == 3


def test_extract_keywords_golden(lexicon):
    item = NewsItem(id="x", topic=Topic.SOCIAL_SERVICES,
                    headline="Las residencias de mayores en Galicia",
                    lead="", published_at=datetime.now(timezone.utc))
    assert extract_keywords(item, lexicon)[:3] == ["residencia", "mayor", "galicia"]


def test_extract_keywords_all_stopwords(lexicon):
    item = NewsItem(id="x", topic=Topic.HEALTH, headline="de la y el en",
                    lead="", published_at=datetime.now(timezone.utc))
    assert extract_keywords(item, lexicon) == []


def test_extract_keywords_top_k(lexicon):
    item = NewsItem(id="x", topic=Topic.HEALTH,
                    headline="vacuna vacuna hospital",
                    lead="vacuna hospital parque",
                    published_at=datetime.now(timezone.utc))
    assert extract_keywords(item, lexicon, k=1) == ["vacuna"]


def test_extract_keywords_frequency_then_first_occurrence(lexicon):
    item = NewsItem(id="x", topic=Topic.HEALTH,
                    headline="parque hospital parque hospital vacuna",
                    lead="", published_at=datetime.now(timezone.utc))
    assert extract_keywords(item, lexicon) == ["parque", "hospital", "vacuna"]


@settings(max_examples=60, deadline=None)
@given(st.text(max_size=120))
def test_extract_keywords_no_stopwords_no_duplicates(text):
    item = NewsItem(id="x", topic=Topic.HEALTH, headline=text or "x",
                    lead="", published_at=datetime.now(timezone.utc))
    keywords = extract_keywords(item, LEX, k=10)
    assert len(keywords) == len(set(keywords))
    assert not any(LEX.is_stopword(k) for k in keywords)


def test_with_keywords_populates_field(lexicon):
    item = parse_payload(PAYLOAD)[0]
    enriched = with_keywords(item, lexicon)
    assert enriched.keywords
    assert enriched.id == item.id

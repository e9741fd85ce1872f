"""Session state machine: small talk, empathetic opinion exchanges and
news readings, alternating to keep the listener engaged.

Each step classifies the user's turn, moves the avatar mood with it, and
produces the next scripted or generated bot clause.  All randomness flows
from the session seed, so transcripts replay byte for byte.
"""

from __future__ import annotations

import json
import random
import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path

from . import nlg, sentiment
from .lexicon import CONTENT_POS, Lexicon, tokenize
from .news import NewsItem, Topic, extract_keywords
from .patterns import KnowledgeBase


class DialogueState(Enum):
    GREETING = "greeting"
    MOOD_PROBE = "mood_probe"
    MOOD_ACK = "mood_ack"
    CONNECTOR = "connector"
    PRE_NEWS = "pre_news"
    NEWS_READING = "news_reading"
    OPINION_PROBE = "opinion_probe"
    OPINION_REPLY = "opinion_reply"
    KEYWORD_CAPTURE = "keyword_capture"
    CLOSED = "closed"


class AvatarMood(Enum):
    HAPPY = "happy"
    NEUTRAL = "neutral"
    SAD = "sad"


_MOOD_BY_POLARITY = {
    "positive": AvatarMood.HAPPY,
    "neutral": AvatarMood.NEUTRAL,
    "negative": AvatarMood.SAD,
}


class SessionClosedError(RuntimeError):
    pass


class StartupError(RuntimeError):
    """A required resource failed to load; names the resource."""

    def __init__(self, resource: str, detail: str):
        self.resource = resource
        super().__init__(f"cannot load {resource}: {detail}")


@dataclass
class ClauseInventory:
    """The scripted Spanish clauses: openers, mood acks, default answers
    with their paired connector groups, pre-news announcements."""

    openers: list[str]
    acks: dict[str, list[str]]
    default_answers: dict[int, str]
    connectors: dict[int, list[str]]
    announce: str
    curiosity: list[str]
    go: str
    farewell: str

    @property
    def all_connectors(self) -> list[str]:
        out: list[str] = []
        for group in sorted(self.connectors):
            out.extend(self.connectors[group])
        return out


def load_clauses(openers_path: Path, acks_path: Path,
                 default_answers_path: Path, connectors_path: Path,
                 pre_news_path: Path) -> ClauseInventory:
    openers = [l for l in Path(openers_path).read_text(encoding="utf-8").splitlines()
               if l.strip()]
    acks: dict[str, list[str]] = {"positive": [], "negative": [], "neutral": []}
    for line in Path(acks_path).read_text(encoding="utf-8").splitlines():
        if not line.strip():
            continue
        polarity, text = line.split("\t")
        acks[polarity].append(text)
    defaults: dict[int, str] = {}
    for line in Path(default_answers_path).read_text(encoding="utf-8").splitlines():
        if not line.strip():
            continue
        option, text = line.split("\t")
        defaults[int(option)] = text
    connectors: dict[int, list[str]] = {}
    for line in Path(connectors_path).read_text(encoding="utf-8").splitlines():
        if not line.strip():
            continue
        group, text = line.split("\t")
        connectors.setdefault(int(group), []).append(text)
    sections: dict[str, list[str]] = {}
    for line in Path(pre_news_path).read_text(encoding="utf-8").splitlines():
        if not line.strip():
            continue
        key, text = line.split("\t")
        sections.setdefault(key, []).append(text)
    return ClauseInventory(
        openers=openers,
        acks=acks,
        default_answers=defaults,
        connectors=connectors,
        announce=sections["announce"][0],
        curiosity=sections["curiosity"],
        go=sections["go"][0],
        farewell=sections["farewell"][0],
    )


@dataclass
class Resources:
    """Immutable engine resources shared by every session."""

    lexicon: Lexicon
    kb: KnowledgeBase
    grammar: nlg.Grammar
    templates: dict[str, list[str]]
    model: sentiment.SentimentModel
    clauses: ClauseInventory
    news_items: list[NewsItem] = field(default_factory=list)


@dataclass
class DialogueConfig:
    flip_probability: float = 0.5
    seed: int | None = None


@dataclass
class Turn:
    speaker: str                    # "user" | "bot"
    text: str
    timestamp: str
    state: str
    polarity: str | None = None


@dataclass
class DialogueSession:
    id: str
    state: DialogueState
    rng: random.Random
    flip_probability: float
    turns: list[Turn] = field(default_factory=list)
    user_keywords: list[str] = field(default_factory=list)
    liked_topics: list[Topic] = field(default_factory=list)
    avatar_mood: AvatarMood = AvatarMood.NEUTRAL
    seen_news_ids: set[str] = field(default_factory=set)
    read_news_ids: list[str] = field(default_factory=list)
    current_item: NewsItem | None = None
    topic_cursor: int = 0


@dataclass
class BotAction:
    reply_text: str
    avatar_mood: AvatarMood
    new_state: DialogueState
    news_item: NewsItem | None = None


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


def start_session(resources: Resources, config: DialogueConfig) -> DialogueSession:
    """Open a session with a seeded opener from the scripted set."""
    seed = config.seed if config.seed is not None else random.SystemRandom().randrange(2 ** 63)
    rng = random.Random(seed)
    session = DialogueSession(
        id=uuid.uuid4().hex,
        state=DialogueState.GREETING,
        rng=rng,
        flip_probability=config.flip_probability,
    )
    opener = resources.clauses.openers[rng.randrange(len(resources.clauses.openers))]
    session.turns.append(Turn(speaker="bot", text=opener, timestamp=_now(),
                              state=session.state.value))
    return session


def step(session: DialogueSession, resources: Resources, user_text: str) -> BotAction:
    """Process one user turn; total for arbitrary input.

    The user's polarity always drives the avatar mood; the reply depends
    on the state the session was waiting in.
    """
    if session.state is DialogueState.CLOSED:
        raise SessionClosedError(f"session {session.id} is closed")
    polarity, _probs = sentiment.predict(resources.model, user_text, resources.lexicon)
    session.avatar_mood = _MOOD_BY_POLARITY[polarity]
    session.turns.append(Turn(speaker="user", text=user_text, timestamp=_now(),
                              state=session.state.value, polarity=polarity))

    handler = _HANDLERS[session.state]
    action = handler(session, resources, user_text, polarity)
    session.state = action.new_state
    session.turns.append(Turn(speaker="bot", text=action.reply_text,
                              timestamp=_now(), state=action.new_state.value))
    return action


def _handle_mood_answer(session: DialogueSession, resources: Resources,
                        user_text: str, polarity: str) -> BotAction:
    acks = resources.clauses.acks.get(polarity) or resources.clauses.acks["neutral"]
    reply = acks[session.rng.randrange(len(acks))]
    return BotAction(reply_text=reply, avatar_mood=session.avatar_mood,
                     new_state=DialogueState.CONNECTOR)


def _handle_connector(session: DialogueSession, resources: Resources,
                      user_text: str, polarity: str) -> BotAction:
    match = resources.kb.match(user_text, rng=session.rng)
    if match is not None and match.template_output:
        reply = match.template_output
    else:
        options = sorted(resources.clauses.default_answers)
        option = options[session.rng.randrange(len(options))]
        default = resources.clauses.default_answers[option]
        group = resources.clauses.connectors.get(option) \
            or resources.clauses.all_connectors
        connector = group[session.rng.randrange(len(group))]
        reply = f"{default}. {connector}"
    return BotAction(reply_text=reply, avatar_mood=session.avatar_mood,
                     new_state=DialogueState.PRE_NEWS)


def _handle_pre_news(session: DialogueSession, resources: Resources,
                     user_text: str, polarity: str) -> BotAction:
    curiosity = resources.clauses.curiosity[
        session.rng.randrange(len(resources.clauses.curiosity))]
    reply = f"{resources.clauses.announce} {curiosity}"
    return BotAction(reply_text=reply, avatar_mood=session.avatar_mood,
                     new_state=DialogueState.NEWS_READING)


def _handle_news_reading(session: DialogueSession, resources: Resources,
                         user_text: str, polarity: str) -> BotAction:
    item = select_news(session, resources.news_items)
    if item is None:
        return BotAction(reply_text=resources.clauses.farewell,
                         avatar_mood=session.avatar_mood,
                         new_state=DialogueState.CLOSED)
    session.current_item = item
    session.read_news_ids.append(item.id)
    reply = f"{resources.clauses.go}. {item.headline}. {item.lead}"
    return BotAction(reply_text=reply, avatar_mood=session.avatar_mood,
                     news_item=item, new_state=DialogueState.OPINION_PROBE)


def _handle_opinion(session: DialogueSession, resources: Resources,
                    user_text: str, polarity: str) -> BotAction:
    _capture_keywords(session, resources, user_text, polarity)
    flip = session.rng.random() < session.flip_probability
    reply = nlg.generate_opinion_reply(
        user_text, polarity, flip,
        seed=session.rng.randrange(2 ** 32),
        lexicon=resources.lexicon, grammar=resources.grammar,
        templates=resources.templates,
    )
    return BotAction(reply_text=reply, avatar_mood=session.avatar_mood,
                     new_state=DialogueState.KEYWORD_CAPTURE)


def _handle_keyword_capture(session: DialogueSession, resources: Resources,
                            user_text: str, polarity: str) -> BotAction:
    _capture_keywords(session, resources, user_text, polarity)
    pool = resources.clauses.all_connectors
    reply = pool[session.rng.randrange(len(pool))]
    return BotAction(reply_text=reply, avatar_mood=session.avatar_mood,
                     new_state=DialogueState.PRE_NEWS)


_HANDLERS = {
    DialogueState.GREETING: _handle_mood_answer,
    DialogueState.MOOD_PROBE: _handle_mood_answer,
    DialogueState.MOOD_ACK: _handle_connector,
    DialogueState.CONNECTOR: _handle_connector,
    DialogueState.PRE_NEWS: _handle_pre_news,
    DialogueState.NEWS_READING: _handle_news_reading,
    DialogueState.OPINION_PROBE: _handle_opinion,
    DialogueState.OPINION_REPLY: _handle_keyword_capture,
    DialogueState.KEYWORD_CAPTURE: _handle_keyword_capture,
}


def content_words(text: str, lexicon: Lexicon) -> list[str]:
    """Stopword-free lemmatised content terms, order kept, deduplicated.

    Known tokens survive only with noun/verb/adjective readings; unknown
    tokens pass through as they are.
    """
    out: list[str] = []
    for token in tokenize(text):
        if lexicon.is_stopword(token):
            continue
        pos = lexicon.pos_of(token)
        if pos is not None and pos not in CONTENT_POS:
            continue
        lemma = lexicon.lemmatise(token)
        if lemma not in out:
            out.append(lemma)
    return out


def _capture_keywords(session: DialogueSession, resources: Resources,
                      user_text: str, polarity: str) -> None:
    for lemma in content_words(user_text, resources.lexicon):
        if lemma not in session.user_keywords:
            session.user_keywords.append(lemma)
    if polarity == "positive" and session.current_item is not None:
        topic = session.current_item.topic
        if topic not in session.liked_topics:
            session.liked_topics.append(topic)


def select_news(session: DialogueSession, items: list[NewsItem]) -> NewsItem | None:
    """Round-robin over liked topics (all topics when none are liked or
    the liked ones run dry); never repeats an item id.  None when every
    item has been read."""
    by_topic: dict[Topic, list[NewsItem]] = {}
    for item in sorted(items, key=lambda it: it.published_at, reverse=True):
        if item.id not in session.seen_news_ids:
            by_topic.setdefault(item.topic, []).append(item)
    if not by_topic:
        return None
    for cycle in (session.liked_topics, list(Topic)):
        if not cycle:
            continue
        for _ in range(len(cycle)):
            topic = cycle[session.topic_cursor % len(cycle)]
            session.topic_cursor += 1
            if topic in by_topic:
                item = by_topic[topic][0]
                session.seen_news_ids.add(item.id)
                return item
    return None


# ---------------------------------------------------------------------------
# session log


def export_session(session: DialogueSession) -> list[dict]:
    """One record per turn plus a trailing summary record."""
    records: list[dict] = []
    for turn in session.turns:
        records.append({
            "record": "turn",
            "speaker": turn.speaker,
            "text": turn.text,
            "polarity": turn.polarity,
            "state": turn.state,
            "timestamp": turn.timestamp,
        })
    last_item = session.current_item
    records.append({
        "record": "summary",
        "session_id": session.id,
        "user_keywords": list(session.user_keywords),
        "liked_topics": [t.value for t in session.liked_topics],
        "read_news_ids": list(session.read_news_ids),
        "last_news_keywords": list(last_item.keywords) if last_item else [],
    })
    return records


def write_session_log(session: DialogueSession, path: str | Path) -> None:
    lines = [json.dumps(r, ensure_ascii=False) for r in export_session(session)]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_session_log(path: str | Path) -> tuple[list[dict], dict]:
    """(turn records, summary record) from a session JSONL file."""
    turns: list[dict] = []
    summary: dict = {}
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if not line.strip():
            continue
        record = json.loads(line)
        if record.get("record") == "summary":
            summary = record
        else:
            turns.append(record)
    return turns, summary

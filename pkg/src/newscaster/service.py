"""HTTP service over the dialogue engine.

Sessions, news and metrics are exposed as small JSON endpoints; every
mutation lands in the session's JSONL log before the response is sent.
"""

from __future__ import annotations

import json
import math
import os
import threading
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from . import metrics as metrics_mod
from .dialogue import (
    DialogueConfig,
    DialogueSession,
    DialogueState,
    Resources,
    SessionClosedError,
    StartupError,
    start_session,
    step,
    write_session_log,
)
from .news import Topic
from .resources import ResourcePaths, load_resources


@dataclass
class ApiConfig:
    host: str = "127.0.0.1"
    port: int = 8765
    flip_probability: float = 0.5
    seed: int | None = None          # None: fresh random seed per session
    session_log_dir: Path = Path("sessions")
    corpus_dir: Path | None = None   # enables the set-distance metric
    paths: ResourcePaths = field(default_factory=ResourcePaths)

    @classmethod
    def from_file(cls, path: str | Path) -> "ApiConfig":
        """Load key=value or JSON configuration; env vars override."""
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f"config file not found: {path}")
        text = path.read_text(encoding="utf-8")
        values: dict[str, str] = {}
        if text.lstrip().startswith("{"):
            values = {k: v for k, v in json.loads(text).items()}
        else:
            for line in text.splitlines():
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise ValueError(f"{path.name}: expected key=value, got {line!r}")
                key, value = line.split("=", 1)
                values[key.strip()] = value.strip().strip('"')
        return cls.from_values(values)

    @classmethod
    def from_values(cls, values: dict) -> "ApiConfig":
        values = dict(values)
        for key, env in _ENV_OVERRIDES.items():
            if env in os.environ:
                values[key] = os.environ[env]
        config = cls()
        if "host" in values:
            config.host = str(values["host"])
        if "port" in values:
            config.port = int(values["port"])
            if not 0 < config.port < 65536:
                raise ValueError(f"port out of range: {config.port}")
        if "flip_probability" in values:
            config.flip_probability = float(values["flip_probability"])
        if "seed" in values and str(values["seed"]).lower() not in ("", "none", "random"):
            config.seed = int(values["seed"])
        if "session_log_dir" in values:
            config.session_log_dir = Path(values["session_log_dir"])
        if "corpus_dir" in values:
            config.corpus_dir = Path(values["corpus_dir"])
        paths = ResourcePaths()
        for name, aliases in _PATH_KEYS.items():
            for key in aliases:
                if key in values:
                    setattr(paths, name, Path(values[key]))
                    break
        config.paths = paths
        return config


# file keys per resource, first match wins
_PATH_KEYS = {
    "lexicon": ("lexicon", "lexicon_path"),
    "stopwords": ("stopwords", "stopwords_path"),
    "categories": ("categories", "categories_path"),
    "patterns": ("patterns", "patterns_path"),
    "grammar": ("grammar", "grammar_path"),
    "templates": ("templates", "template_set_path"),
    "model": ("model", "model_path"),
    "news": ("news", "news_path"),
    "openers": ("openers", "opener_set_path"),
    "acks": ("acks", "ack_set_path"),
    "default_answers": ("default_answers", "default_answer_set_path"),
    "connectors": ("connectors", "connector_set_path"),
    "pre_news": ("pre_news", "pre_news_set_path"),
}

_ENV_OVERRIDES = {
    "host": "NEWSCASTER_HOST",
    "port": "NEWSCASTER_PORT",
    "flip_probability": "NEWSCASTER_FLIP_PROBABILITY",
    "seed": "NEWSCASTER_SEED",
    "session_log_dir": "NEWSCASTER_SESSION_LOG_DIR",
    "corpus_dir": "NEWSCASTER_CORPUS_DIR",
}


class UtteranceIn(BaseModel):
    text: str


class EngineState:
    """Mutable service state: resources, sessions and their locks."""

    def __init__(self, config: ApiConfig):
        self.config = config
        self.resources: Resources | None = None
        self.startup_error: StartupError | None = None
        self.sessions: dict[str, DialogueSession] = {}
        self.locks: dict[str, threading.Lock] = {}
        self.registry_lock = threading.Lock()
        self.corpus_index: metrics_mod.CorpusIndex | None = None
        try:
            self.resources = load_resources(config.paths)
        except StartupError as exc:
            self.startup_error = exc
            return
        if config.corpus_dir is not None and Path(config.corpus_dir).is_dir():
            self.corpus_index = metrics_mod.CorpusIndex.from_directory(
                config.corpus_dir, lexicon=self.resources.lexicon)
        config.session_log_dir.mkdir(parents=True, exist_ok=True)

    def session_lock(self, session_id: str) -> threading.Lock:
        with self.registry_lock:
            return self.locks.setdefault(session_id, threading.Lock())

    def log_path(self, session_id: str) -> Path:
        return self.config.session_log_dir / f"{session_id}.jsonl"


def create_app(config: ApiConfig | None = None) -> FastAPI:
    config = config or ApiConfig()
    state = EngineState(config)
    app = FastAPI(title="newscaster", version="0.1.0")
    app.state.engine = state

    def require_resources() -> Resources:
        if state.resources is None:
            raise HTTPException(status_code=503, detail=str(state.startup_error))
        return state.resources

    def require_session(session_id: str) -> DialogueSession:
        session = state.sessions.get(session_id)
        if session is None:
            raise HTTPException(status_code=404,
                                detail=f"unknown session {session_id}")
        return session

    @app.get("/healthz")
    def healthz():
        return {"status": "ok" if state.resources is not None else "degraded"}

    @app.post("/sessions", status_code=201)
    def create_session():
        resources = require_resources()
        session = start_session(
            resources,
            DialogueConfig(flip_probability=config.flip_probability,
                           seed=config.seed),
        )
        with state.registry_lock:
            state.sessions[session.id] = session
        write_session_log(session, state.log_path(session.id))
        return {
            "session_id": session.id,
            "opener_text": session.turns[0].text,
            "avatar_mood": session.avatar_mood.value,
        }

    @app.post("/sessions/{session_id}/utterance")
    def post_utterance(session_id: str, payload: UtteranceIn):
        resources = require_resources()
        session = require_session(session_id)
        with state.session_lock(session_id):
            if session.state is DialogueState.CLOSED:
                raise HTTPException(status_code=409,
                                    detail=f"session {session_id} is closed")
            try:
                action = step(session, resources, payload.text)
            except SessionClosedError:
                raise HTTPException(status_code=409,
                                    detail=f"session {session_id} is closed")
            write_session_log(session, state.log_path(session_id))
        news = None
        if action.news_item is not None:
            news = {"headline": action.news_item.headline,
                    "lead": action.news_item.lead}
        return {
            "reply": action.reply_text,
            "avatar_mood": action.avatar_mood.value,
            "state": action.new_state.value,
            "news": news,
        }

    @app.get("/sessions/{session_id}/metrics")
    def get_metrics(session_id: str):
        resources = require_resources()
        session = require_session(session_id)
        if not session.read_news_ids:
            raise HTTPException(status_code=422,
                                detail="no news has been read in this session")
        out = {
            "user_keywords": list(session.user_keywords),
            "liked_topics": [t.value for t in session.liked_topics],
        }
        if state.corpus_index is not None and session.current_item is not None:
            news_terms = list(session.current_item.keywords)
            if session.user_keywords and news_terms:
                value = metrics_mod.set_ngd(
                    session.user_keywords, news_terms, state.corpus_index)
                out["set_ngd"] = None if math.isinf(value) else value
        return out

    @app.get("/news")
    def get_news(topic: str | None = None, limit: int = 10):
        resources = require_resources()
        items = resources.news_items
        if topic is not None:
            try:
                wanted = Topic(topic)
            except ValueError:
                raise HTTPException(status_code=400,
                                    detail=f"unknown topic {topic!r}")
            items = [it for it in items if it.topic is wanted]
        return [it.to_dict() for it in items[:limit]]

    return app

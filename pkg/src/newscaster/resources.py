"""Locations of the bundled data files and loaders for the default stack."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .lexicon import Lexicon, load_lexicon


def data_path(*parts: str) -> Path:
    """Absolute path of a bundled data file."""
    root = resources.files("newscaster") / "data"
    return Path(str(root.joinpath(*parts)))


@lru_cache(maxsize=1)
def default_lexicon() -> Lexicon:
    """The bundled lexicon with stopwords and semantic categories attached."""
    return load_lexicon(
        data_path("lexicon.tsv"),
        stopwords_path=data_path("stopwords.txt"),
        categories_path=data_path("categories.tsv"),
    )


@dataclass
class ResourcePaths:
    """Where every engine resource lives; defaults to the bundled data."""

    lexicon: Path = data_path("lexicon.tsv")
    stopwords: Path = data_path("stopwords.txt")
    categories: Path = data_path("categories.tsv")
    patterns: Path = data_path("patterns.xml")
    grammar: Path = data_path("grammar.txt")
    templates: Path = data_path("templates.tsv")
    model: Path = data_path("sa_model.json")
    news: Path = data_path("news")
    openers: Path = data_path("dialogue", "openers.txt")
    acks: Path = data_path("dialogue", "acks.tsv")
    default_answers: Path = data_path("dialogue", "default_answers.tsv")
    connectors: Path = data_path("dialogue", "connectors.tsv")
    pre_news: Path = data_path("dialogue", "pre_news.tsv")


def load_resources(paths: ResourcePaths | None = None):
    """Assemble the full engine resource bundle.

    Raises dialogue.StartupError naming the first resource that fails.
    """
    from . import nlg, sentiment
    from .dialogue import Resources, StartupError, load_clauses
    from .news import NewsItem, fetch_news
    from .patterns import load_knowledge_base

    paths = paths or ResourcePaths()

    def attempt(name: str, fn):
        try:
            return fn()
        except FileNotFoundError as exc:
            raise StartupError(name, f"missing file {exc.filename}") from None
        except Exception as exc:
            raise StartupError(name, str(exc)) from None

    lexicon = attempt("lexicon", lambda: load_lexicon(
        paths.lexicon, stopwords_path=paths.stopwords,
        categories_path=paths.categories))
    kb = attempt("pattern knowledge base",
                 lambda: load_knowledge_base(paths.patterns))
    grammar = attempt("grammar", lambda: nlg.load_grammar(paths.grammar))
    templates = attempt("reply templates",
                        lambda: nlg.load_templates(paths.templates))
    model = attempt("sentiment model", lambda: sentiment.load_model(paths.model))
    clauses = attempt("dialogue clauses", lambda: load_clauses(
        paths.openers, paths.acks, paths.default_answers,
        paths.connectors, paths.pre_news))
    news_items: list[NewsItem] = []
    if Path(paths.news).exists():
        news_items = attempt(
            "news fixtures",
            lambda: fetch_news(str(paths.news)).items)
    from .news import with_keywords
    news_items = [with_keywords(item, lexicon) for item in news_items]
    return Resources(lexicon=lexicon, kb=kb, grammar=grammar,
                     templates=templates, model=model, clauses=clauses,
                     news_items=news_items)

#!/usr/bin/env python3
"""Scripted walkthrough: one full dialogue cycle plus the abstraction
metrics computed over the bundled news fixtures.

    python scripts/run_demo.py [seed]
"""

from __future__ import annotations

import sys

from newscaster.dialogue import DialogueConfig, start_session, step
from newscaster.metrics import CorpusIndex, set_ngd
from newscaster.resources import load_resources

SCRIPT = [
    "bien",
    "gracias por preguntar",
    "me gusta la radio",
    "claro, adelante",
    "Me parece una noticia interesante",
    "me interesan las residencias y la salud",
]


def main() -> None:
    seed = int(sys.argv[1]) if len(sys.argv) > 1 else 0
    resources = load_resources()
    session = start_session(resources, DialogueConfig(flip_probability=1.0,
                                                      seed=seed))
    print(f"BOT  [{session.avatar_mood.value:7s}] {session.turns[0].text}")
    for user_text in SCRIPT:
        action = step(session, resources, user_text)
        print(f"USER           {user_text}")
        print(f"BOT  [{action.avatar_mood.value:7s}] {action.reply_text}")

    print()
    print("captured keywords :", ", ".join(session.user_keywords) or "-")
    print("liked topics      :", ", ".join(t.value for t in session.liked_topics) or "-")

    if session.current_item is not None and session.user_keywords:
        docs = [f"{it.headline} {it.lead} {it.body}" for it in resources.news_items]
        index = CorpusIndex(docs, lexicon=resources.lexicon)
        news_terms = list(session.current_item.keywords)
        value = set_ngd(session.user_keywords, news_terms, index)
        print("news terms        :", ", ".join(news_terms))
        print(f"set distance      : {value:.4f}  (corpus of {index.total_docs()} items)")


if __name__ == "__main__":
    main()

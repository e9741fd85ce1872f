#!/usr/bin/env python3
"""Retrain the bundled sentiment model from the bundled corpus.

Run from the repo root after touching sa_corpus.tsv or the lexicon:

    python scripts/train_fixture_model.py
"""

from __future__ import annotations

from pathlib import Path

from newscaster.resources import data_path, default_lexicon
from newscaster.sentiment import load_corpus, predict, save_model, train_model

PROBES = [
    ("bien", "positive"),
    ("genial", "positive"),
    ("fantástico", "positive"),
    ("Me parece una noticia interesante", "positive"),
    ("mal", "negative"),
    ("fatal", "negative"),
    ("horrible", "negative"),
    ("no muy bien", "negative"),
    ("", "neutral"),
    ("el tren sale pronto", "neutral"),
]


def main() -> None:
    lexicon = default_lexicon()
    rows = load_corpus(data_path("sa_corpus.tsv"))
    model = train_model(rows, lexicon)
    out = data_path("sa_model.json")
    save_model(model, out)
    print(f"trained on {len(rows)} rows -> {out}")
    failures = 0
    for text, expected in PROBES:
        got, probs = predict(model, text, lexicon)
        status = "ok" if got == expected else "MISMATCH"
        if got != expected:
            failures += 1
        print(f"  {status:8s} {text!r} -> {got} {probs}")
    if failures:
        raise SystemExit(f"{failures} probe(s) misclassified")


if __name__ == "__main__":
    main()

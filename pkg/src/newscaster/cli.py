"""Command-line entry points: training, evaluation, ingestion, metrics,
a terminal chat loop, and the HTTP service."""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import metrics as metrics_mod
from . import sentiment
from .dialogue import DialogueConfig, DialogueState, start_session, step
from .news import NewsStore, Topic, fetch_news
from .resources import default_lexicon, load_resources


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="newscaster",
        description="Conversational newscaster engine and analysis tools",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_train = sub.add_parser("train-sa", help="train the polarity classifier")
    p_train.add_argument("--data", required=True, help="corpus TSV (label<TAB>text)")
    p_train.add_argument("--out", required=True, help="model JSON output path")
    p_train.add_argument("--percentile", type=float, default=0.80)
    p_train.add_argument("--max-depth", type=int, default=32)

    p_eval = sub.add_parser("eval-sa", help="cross-validate the classifier")
    p_eval.add_argument("--data", required=True)
    p_eval.add_argument("--folds", type=int, default=10)
    p_eval.add_argument("--seed", type=int, default=0)
    p_eval.add_argument("--percentile", type=float, default=0.80)
    p_eval.add_argument("--max-depth", type=int, default=32)

    p_ingest = sub.add_parser("ingest", help="fetch news into the local cache")
    p_ingest.add_argument("--source", required=True, help="endpoint URL or fixture dir")
    p_ingest.add_argument("--topic", choices=[t.value for t in Topic])
    p_ingest.add_argument("--limit", type=int, default=None)
    p_ingest.add_argument("--cache", default="news_cache.jsonl")

    p_chat = sub.add_parser("chat", help="terminal chat loop")
    p_chat.add_argument("--seed", type=int, default=None)
    p_chat.add_argument("--flip-probability", type=float, default=0.5)

    p_ngd = sub.add_parser("ngd", help="set distance between term lists")
    p_ngd.add_argument("--corpus", required=True, help="directory of text documents")
    p_ngd.add_argument("--user-terms", required=True,
                       help="comma-separated user terms")
    p_ngd.add_argument("--news-terms", required=True,
                       help="comma-separated news terms")
    p_ngd.add_argument("--lemmatise", action="store_true",
                       help="lemmatise corpus tokens with the bundled lexicon")

    p_report = sub.add_parser("report", help="group averages against a gold standard")
    p_report.add_argument("--sessions", help="directory of session JSONL logs")
    p_report.add_argument("--groups", required=True,
                          help="TSV user<TAB>group assignment file")
    p_report.add_argument("--gold", type=float, required=True)
    p_report.add_argument("--values", help="TSV user<TAB>ngd fixture values "
                          "(skips recomputation)")
    p_report.add_argument("--corpus", help="document directory for recomputation")
    p_report.add_argument("--json", dest="json_out", help="write the JSON report here")

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--config", help="key=value or JSON config file")
    p_serve.add_argument("--host", default=None)
    p_serve.add_argument("--port", type=int, default=None)

    return parser


def _cmd_train(args: argparse.Namespace) -> int:
    lexicon = default_lexicon()
    rows = sentiment.load_corpus(args.data)
    model = sentiment.train_model(rows, lexicon, percentile=args.percentile,
                                  max_depth=args.max_depth)
    sentiment.save_model(model, args.out)
    print(f"trained on {len(rows)} rows; model written to {args.out}")
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    lexicon = default_lexicon()
    rows = sentiment.load_corpus(args.data)
    report = sentiment.cross_validate(rows, lexicon, folds=args.folds,
                                      seed=args.seed,
                                      percentile=args.percentile,
                                      max_depth=args.max_depth)
    print(f"{'Classifier':<16}{'P_macro':>10}{'F_macro':>10}{'Accuracy':>10}")
    print(f"{'Decision Tree':<16}{report.p_macro:>9.2%}{report.f_macro:>9.2%}"
          f"{report.accuracy:>9.2%}")
    return 0


def _cmd_ingest(args: argparse.Namespace) -> int:
    store = NewsStore(args.cache)
    topic = Topic(args.topic) if args.topic else None
    result = fetch_news(args.source, topic=topic, limit=args.limit, store=store)
    flag = " (stale cache)" if result.stale else ""
    print(f"{len(result.items)} item(s) retrieved{flag}; cache at {args.cache}")
    for item in result.items:
        print(f"  [{item.topic.value}] {item.headline}")
    return 0


def _cmd_chat(args: argparse.Namespace) -> int:
    resources = load_resources()
    config = DialogueConfig(flip_probability=args.flip_probability, seed=args.seed)
    session = start_session(resources, config)
    print(f"BOT: {session.turns[0].text}")
    try:
        while session.state is not DialogueState.CLOSED:
            try:
                user = input("YOU: ")
            except EOFError:
                break
            action = step(session, resources, user)
            print(f"BOT: {action.reply_text}")
    except KeyboardInterrupt:
        pass
    print("(session ended)")
    return 0


def _cmd_ngd(args: argparse.Namespace) -> int:
    lexicon = default_lexicon() if args.lemmatise else None
    index = metrics_mod.CorpusIndex.from_directory(args.corpus, lexicon=lexicon)
    user_terms = [t.strip() for t in args.user_terms.split(",") if t.strip()]
    news_terms = [t.strip() for t in args.news_terms.split(",") if t.strip()]
    value = metrics_mod.set_ngd(user_terms, news_terms, index)
    print("inf" if math.isinf(value) else f"{value:.5f}")
    return 0


def _load_groups(path: str) -> dict[str, int]:
    groups: dict[str, int] = {}
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        user, group = line.split("\t")
        groups[user] = int(group)
    return groups


def _cmd_report(args: argparse.Namespace) -> int:
    groups = _load_groups(args.groups)
    values: dict[str, float] = {}
    if args.values:
        for line in Path(args.values).read_text(encoding="utf-8").splitlines():
            if not line.strip() or line.startswith("#"):
                continue
            user, value = line.split("\t")
            values[user] = float(value)
    elif args.sessions:
        if not args.corpus:
            print("report: --corpus is required to recompute from sessions",
                  file=sys.stderr)
            return 2
        from .dialogue import read_session_log
        lexicon = default_lexicon()
        index = metrics_mod.CorpusIndex.from_directory(args.corpus, lexicon=lexicon)
        for log in sorted(Path(args.sessions).glob("*.jsonl")):
            _, summary = read_session_log(log)
            user_terms = summary.get("user_keywords") or []
            news_terms = summary.get("last_news_keywords") or []
            if not user_terms or not news_terms:
                continue
            values[summary.get("session_id", log.stem)] = metrics_mod.set_ngd(
                user_terms, news_terms, index)
    else:
        print("report: provide --values or --sessions", file=sys.stderr)
        return 2
    report = metrics_mod.group_report(values, groups, gold=args.gold)
    print(metrics_mod.format_report_table(report))
    if args.json_out:
        Path(args.json_out).write_text(
            json.dumps(report.to_dict(), ensure_ascii=False, indent=1),
            encoding="utf-8")
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    from .service import ApiConfig, create_app

    config = ApiConfig.from_file(args.config) if args.config else ApiConfig()
    if args.host:
        config.host = args.host
    if args.port:
        config.port = args.port
    app = create_app(config)
    import uvicorn

    uvicorn.run(app, host=config.host, port=config.port, log_level="warning")
    return 0


_COMMANDS = {
    "train-sa": _cmd_train,
    "eval-sa": _cmd_eval,
    "ingest": _cmd_ingest,
    "chat": _cmd_chat,
    "ngd": _cmd_ngd,
    "report": _cmd_report,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except BrokenPipeError:
        return 1
    except Exception as exc:
        print(f"newscaster {args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

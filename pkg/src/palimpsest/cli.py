"""Unified command-line interface.

Subcommands: ingest, index, detect, sweep, serve, context. Exit codes:
0 success, 1 usage error, 2 data error. Output is deterministic given the
inputs so reports can be cached and diffed.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from .config import ENV_ROOT, Config, load_config
from .corpus import Corpus, CorpusStore, IngestError
from .detect import (
    DEFAULT_CONTEXT_RADIUS,
    DetectionError,
    detect_pair,
    extract_context,
)
from .evaluate import (
    load_gold,
    parameter_sweep,
    render_sweep_tables,
    write_sweep_csv,
)
from .index import IndexingError, build_index, load_index, save_index
from .pipeline import TextPipeline, load_stoplist, load_strength_overrides
from .stemming import UnsupportedLanguageError
from .windows import DetectionParams

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; the CLI contract wants 1.
    def error(self, message):
        raise UsageError(message)


def _parse_range(spec: str) -> list[int]:
    """Accept "3", "1..6" or "1,3,5"."""
    spec = spec.strip()
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    if "," in spec:
        return [int(x) for x in spec.split(",") if x.strip()]
    return [int(spec)]


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="palimpsest",
        description="Detect and explore approximate textual reuses between documents.",
    )
    parser.add_argument("--root", help=f"corpus store root (or ${ENV_ROOT})")
    parser.add_argument("--config", help="path to a palimpsest.toml config file")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("ingest", help="normalize and store documents")
    p.add_argument("--corpus", required=True)
    p.add_argument("files", nargs="+")
    p.add_argument("--author", default="")
    p.add_argument("--encoding")

    p = sub.add_parser("index", help="build and persist the fingerprint index")
    p.add_argument("--corpus", required=True)
    _add_param_flags(p)
    p.add_argument("--prune-singletons", action="store_true")
    p.add_argument("--out", help="index file (default: inside the corpus directory)")

    p = sub.add_parser("detect", help="detect reuses between two documents")
    p.add_argument("--corpus", required=True)
    p.add_argument("--a", required=True, dest="doc_a")
    p.add_argument("--b", required=True, dest="doc_b", help="document or ALL")
    _add_param_flags(p)
    p.add_argument("--index", help="use a previously built index file")
    p.add_argument("--out", help="report file (default: stdout)")

    p = sub.add_parser("sweep", help="score a parameter grid against gold annotations")
    p.add_argument("--corpus", required=True)
    p.add_argument("--gold", required=True)
    p.add_argument("--nw", default="1..6", help="grid values, e.g. 1..6 or 2,3")
    p.add_argument("--nh", default="0..5")
    p.add_argument("--smin", type=int, default=4)
    p.add_argument("--splice-gap", default="auto")
    p.add_argument("--overlap-theta", type=float, default=None)
    p.add_argument("--csv", help="also write per-cell counts as CSV")
    _add_lang_flags(p)

    p = sub.add_parser("serve", help="run the HTTP API for the explorer")
    p.add_argument("--host")
    p.add_argument("--port", type=int)
    _add_lang_flags(p)

    p = sub.add_parser("context", help="print highlighted context for one block")
    p.add_argument("--corpus", required=True)
    p.add_argument("--a", required=True, dest="doc_a")
    p.add_argument("--b", required=True, dest="doc_b")
    p.add_argument("--block", type=int, default=0)
    p.add_argument("--radius", type=int, default=DEFAULT_CONTEXT_RADIUS)
    _add_param_flags(p)
    return parser


def _add_lang_flags(p) -> None:
    p.add_argument("--lang", choices=["fr", "en"], default=None)
    p.add_argument("--stoplist", help="replacement stop-word file")
    p.add_argument("--strength-overrides", help="stem<TAB>STRONG|WEAK file")
    p.add_argument("--weak-df", type=float, default=None)
    p.add_argument("--weak-rank", type=int, default=None)


def _add_param_flags(p) -> None:
    p.add_argument("--nw", type=int, default=None)
    p.add_argument("--nh", type=int, default=None)
    p.add_argument("--smin", type=int, default=None)
    p.add_argument("--splice-gap", default=None, help='content-token gap or "auto"')
    _add_lang_flags(p)


def _params_from_args(args, cfg: Config) -> DetectionParams:
    gap = cfg.params.splice_gap
    if getattr(args, "splice_gap", None) is not None:
        gap = None if str(args.splice_gap).lower() == "auto" else int(args.splice_gap)
    try:
        return DetectionParams(
            n_w=args.nw if args.nw is not None else cfg.params.n_w,
            n_h=args.nh if args.nh is not None else cfg.params.n_h,
            s_min=args.smin if args.smin is not None else cfg.params.s_min,
            splice_gap=gap,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _pipeline_from_args(args, cfg: Config) -> TextPipeline:
    language = getattr(args, "lang", None) or cfg.language
    stoplist = None
    path = getattr(args, "stoplist", None) or cfg.stoplist_path
    if path:
        stoplist = load_stoplist(path)
    try:
        return TextPipeline(language=language, stoplist=stoplist)
    except UnsupportedLanguageError as exc:
        raise UsageError(str(exc)) from exc


def _overrides_from_args(args, cfg: Config):
    path = getattr(args, "strength_overrides", None) or cfg.strength_overrides_path
    if not path:
        return None
    return load_strength_overrides(path)


def _resolve_doc(corpus: Corpus, ref: str) -> str:
    """Resolve a document reference: exact doc_id, unique doc_id prefix, or
    unique case-insensitive title substring."""
    ids = corpus.doc_ids()
    if ref in ids:
        return ref
    by_prefix = [d for d in ids if d.startswith(ref)]
    if len(by_prefix) == 1:
        return by_prefix[0]
    low = ref.lower()
    by_title = [d.doc_id for d in corpus.documents if low in d.title.lower()]
    if len(by_title) == 1:
        return by_title[0]
    candidates = by_prefix or by_title
    if candidates:
        raise DataError(f"ambiguous document reference {ref!r}: {sorted(candidates)}")
    raise DataError(f"no document matches {ref!r} in corpus {corpus.corpus_id!r}")


def _default_index_path(store: CorpusStore, corpus_id: str, params: DetectionParams,
                        pruned: bool) -> Path:
    suffix = "-pruned" if pruned else ""
    return store.corpus_dir(corpus_id) / f"index-nw{params.n_w}-nh{params.n_h}{suffix}.idx"


def _get_index(args, cfg: Config, store: CorpusStore, corpus: Corpus,
               params: DetectionParams):
    index_path = getattr(args, "index", None)
    if index_path:
        index = load_index(index_path, expected_corpus_digest=corpus.manifest_digest)
        if (index.params.n_w, index.params.n_h) != (params.n_w, params.n_h):
            raise DataError(
                f"index {index_path} was built with (n_w={index.params.n_w}, "
                f"n_h={index.params.n_h}); rebuild it or pass matching flags"
            )
        return index
    pipeline = _pipeline_from_args(args, cfg)
    return build_index(
        corpus,
        pipeline,
        params,
        strength_overrides=_overrides_from_args(args, cfg),
        weak_df=args.weak_df if args.weak_df is not None else cfg.weak_df,
        weak_rank=args.weak_rank if args.weak_rank is not None else cfg.weak_rank,
        rank_min_freq=cfg.rank_min_freq,
    )


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_ingest(args, cfg: Config, store: CorpusStore) -> int:
    for path in args.files:
        doc = store.ingest(
            path, corpus_id=args.corpus, author=args.author, encoding=args.encoding
        )
        print(f"{doc.doc_id}\t{doc.char_count}\t{doc.title}")
    return EXIT_OK


def _cmd_index(args, cfg: Config, store: CorpusStore) -> int:
    params = _params_from_args(args, cfg)
    corpus = store.load_corpus(args.corpus)
    pipeline = _pipeline_from_args(args, cfg)
    index = build_index(
        corpus,
        pipeline,
        params,
        prune_singletons=args.prune_singletons,
        strength_overrides=_overrides_from_args(args, cfg),
        weak_df=args.weak_df if args.weak_df is not None else cfg.weak_df,
        weak_rank=args.weak_rank if args.weak_rank is not None else cfg.weak_rank,
        rank_min_freq=cfg.rank_min_freq,
    )
    out = Path(args.out) if args.out else _default_index_path(
        store, args.corpus, params, args.prune_singletons
    )
    out.parent.mkdir(parents=True, exist_ok=True)
    save_index(index, out)
    info = index.stats()
    print(
        f"indexed {info['documents']} documents: {info['fingerprints']} fingerprints, "
        f"{info['postings']} postings -> {out}"
    )
    return EXIT_OK


def _cmd_detect(args, cfg: Config, store: CorpusStore) -> int:
    params = _params_from_args(args, cfg)
    corpus = store.load_corpus(args.corpus)
    index = _get_index(args, cfg, store, corpus, params)
    doc_a = _resolve_doc(corpus, args.doc_a)
    if args.doc_b.upper() == "ALL":
        others = [d for d in corpus.doc_ids() if d != doc_a]
    else:
        others = [_resolve_doc(corpus, args.doc_b)]
    reports = [detect_pair(index, doc_a, other, params) for other in others]
    if len(reports) == 1:
        payload = reports[0].to_json(indent=2)
    else:
        payload = json.dumps(
            {
                "schema_version": 1,
                "doc_a": doc_a,
                "reports": [json.loads(r.to_json()) for r in reports],
            },
            ensure_ascii=False,
            indent=2,
            sort_keys=True,
        )
    if args.out:
        Path(args.out).write_text(payload + "\n", encoding="utf-8")
        total_blocks = sum(len(r.blocks) for r in reports)
        total_zones = sum(len(r.zones) for r in reports)
        print(f"{total_blocks} blocks, {total_zones} zones -> {args.out}")
    else:
        print(payload)
    return EXIT_OK


def _cmd_sweep(args, cfg: Config, store: CorpusStore) -> int:
    corpus = store.load_corpus(args.corpus)
    gold = load_gold(args.gold)
    pipeline = _pipeline_from_args(args, cfg)
    gap = None if str(args.splice_gap).lower() == "auto" else int(args.splice_gap)
    try:
        base = DetectionParams(s_min=args.smin, splice_gap=gap)
        n_ws = _parse_range(args.nw)
        n_hs = _parse_range(args.nh)
        for w in n_ws:
            DetectionParams(n_w=w)
        for h in n_hs:
            DetectionParams(n_h=h)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    theta = args.overlap_theta if args.overlap_theta is not None else cfg.overlap_theta
    result = parameter_sweep(
        corpus, pipeline, gold, n_ws, n_hs, base_params=base, theta=theta
    )
    print(render_sweep_tables(result), end="")
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            write_sweep_csv(result, fh)
        print(f"per-cell counts -> {args.csv}")
    return EXIT_OK


def _cmd_serve(args, cfg: Config, store: CorpusStore) -> int:
    import uvicorn

    from .server import create_app

    app = create_app(store, cfg)
    uvicorn.run(
        app,
        host=args.host or cfg.host,
        port=args.port if args.port is not None else cfg.port,
        log_level="info",
    )
    return EXIT_OK


def _cmd_context(args, cfg: Config, store: CorpusStore) -> int:
    params = _params_from_args(args, cfg)
    corpus = store.load_corpus(args.corpus)
    index = _get_index(args, cfg, store, corpus, params)
    doc_a = _resolve_doc(corpus, args.doc_a)
    doc_b = _resolve_doc(corpus, args.doc_b)
    report = detect_pair(index, doc_a, doc_b, params)
    if not report.blocks:
        raise DataError(f"no blocks detected between {doc_a} and {doc_b}")
    if not 0 <= args.block < len(report.blocks):
        raise DataError(
            f"block {args.block} out of range (0..{len(report.blocks) - 1})"
        )
    block = report.blocks[args.block]
    ctx = extract_context(block, args.radius, index, block_id=args.block)
    print(f"== {report.doc_a} [{block.a_span[0]}..{block.a_span[1]}] ==")
    print(_highlighted(ctx.a_excerpt, ctx.a_highlights))
    print(f"== {report.doc_b} [{block.b_span[0]}..{block.b_span[1]}] ==")
    print(_highlighted(ctx.b_excerpt, ctx.b_highlights))
    return EXIT_OK


def _highlighted(excerpt: str, highlights) -> str:
    out = []
    pos = 0
    for start, end in highlights:
        out.append(excerpt[pos:start])
        out.append(f"[{excerpt[start:end]}]")
        pos = end
    out.append(excerpt[pos:])
    return "".join(out)


_COMMANDS = {
    "ingest": _cmd_ingest,
    "index": _cmd_index,
    "detect": _cmd_detect,
    "sweep": _cmd_sweep,
    "serve": _cmd_serve,
    "context": _cmd_context,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(message)s")
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            parser.print_usage(sys.stderr)
            print("error: a subcommand is required", file=sys.stderr)
            return EXIT_USAGE
        cfg = load_config(args.config)
        if args.root:
            cfg.corpus_root = Path(args.root)
        store = CorpusStore(cfg.corpus_root)
        return _COMMANDS[args.command](args, cfg, store)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (IngestError, IndexingError, DetectionError, DataError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())

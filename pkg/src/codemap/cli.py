"""Command-line pipeline driver.

Each subcommand reads its upstream artifacts from --out-dir and writes
its own, so stages can be rerun independently; `run-all` chains them.
Every artifact starts with a provenance comment (tool version, config
hash, seed).  Exit codes: 0 success, 1 usage, 2 I/O or missing
artifact, 3 data or validation failure.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import __version__, align, corpus, embed, hier, retrieve
from .config import config_hash, parse_config, provenance
from .syntax import (ParseError, build_symbols, extract_elements, normalize,
                     parse, read_elements, read_stream, write_elements,
                     write_stream)


class MissingArtifact(Exception):
    """An upstream stage's output is absent."""


def _require(path, stage):
    if not Path(path).exists():
        raise MissingArtifact(f"{path} not found; run {stage} first")
    return Path(path)


def _summary(stage, text, t0):
    print(f"[{stage}] {text} ({time.perf_counter() - t0:.2f}s)",
          file=sys.stderr)


def _stream_path(out_dir, side, relpath):
    return out_dir / "streams" / side / (relpath + ".tok")


def _elements_path(out_dir, side, relpath):
    return out_dir / "elements" / side / (relpath + ".tsv")


# ---------------------------------------------------------------------------
# stages


def stage_pair(cfg, out_dir, prov):
    t0 = time.perf_counter()
    pairs = corpus.pair_files(cfg.manifest, cfg.threshold)
    corpus.write_pair_manifest(pairs, out_dir / "pairs.tsv",
                               comments=(prov,))
    _summary("pair", f"{len(pairs)} file pairs at threshold "
             f"{cfg.threshold}", t0)
    return pairs


def stage_normalize(cfg, out_dir, prov):
    t0 = time.perf_counter()
    pairs = corpus.read_pair_manifest(_require(out_dir / "pairs.tsv",
                                               "pair"))
    sides = (("a", cfg.manifest.lang_a_root, cfg.manifest.lang_a),
             ("b", cfg.manifest.lang_b_root, cfg.manifest.lang_b))
    n_tokens = 0
    for pair in pairs:
        for side, root, lang in sides:
            relpath = pair.path_a if side == "a" else pair.path_b
            source = Path(root, relpath).read_text(encoding="utf-8")
            try:
                tree = parse(source, lang)
            except ParseError as err:
                raise ValueError(f"{relpath}: {err}") from None
            stream = normalize(tree, build_symbols(tree), file=relpath)
            out = _stream_path(out_dir, side, relpath)
            out.parent.mkdir(parents=True, exist_ok=True)
            write_stream(stream, out, comments=(prov,))
            elements = extract_elements(tree, stream)
            out = _elements_path(out_dir, side, relpath)
            out.parent.mkdir(parents=True, exist_ok=True)
            write_elements(elements, out, comments=(prov,))
            n_tokens += len(stream.tokens)
    _summary("normalize", f"{2 * len(pairs)} files, {n_tokens} tokens",
             t0)


def _read_bitext(cfg, out_dir):
    """Raw (tokens_a, tokens_b, pair_id) triples from the stream files,
    chunked to the configured maximum length."""
    pairs = corpus.read_pair_manifest(_require(out_dir / "pairs.tsv",
                                               "pair"))
    raw = []
    for pair in pairs:
        path_a = _require(_stream_path(out_dir, "a", pair.path_a),
                          "normalize")
        path_b = _require(_stream_path(out_dir, "b", pair.path_b),
                          "normalize")
        _, _, tokens_a = read_stream(path_a)
        _, _, tokens_b = read_stream(path_b)
        raw.append((tokens_a, tokens_b, pair.path_a))
    return align.build_bitext(raw, max_len=cfg.align_max_len)


def stage_align(cfg, out_dir, prov, threads=1):
    t0 = time.perf_counter()
    bitext = _read_bitext(cfg, out_dir)
    if not bitext:
        raise ValueError("no non-empty stream pairs; nothing to align")
    links, table = align.align_bitext(bitext,
                                      iterations=cfg.align_iterations,
                                      mode=cfg.symmetrization,
                                      threads=threads)
    align.write_alignments(links, out_dir / "alignments.pharaoh",
                           comments=(prov,))
    align.write_table(table, out_dir / "ttable.tsv", comments=(prov,))
    n_links = sum(len(s.links) for s in links)
    _summary("align", f"{len(bitext)} aligned chunks, {n_links} links, "
             f"{cfg.align_iterations} EM iterations", t0)


def stage_train(cfg, out_dir, prov, threads=1):
    t0 = time.perf_counter()
    bitext = _read_bitext(cfg, out_dir)
    links = align.read_alignments(_require(out_dir / "alignments.pharaoh",
                                           "align"))
    vocab = embed.vocab_from_bitext(bitext, cfg.train.min_count)
    table = embed.train_biskip(bitext, links, cfg.train, vocab=vocab,
                               threads=threads)
    embed.save_embeddings(table, vocab, out_dir / "embeddings.txt",
                          comments=(prov,))
    _summary("train", f"{len(vocab)} vocabulary entries, dim "
             f"{cfg.train.dim}, {cfg.train.epochs} epochs", t0)


def _load_elements(cfg, out_dir):
    """(element_id, tagged tokens) for every extracted element."""
    pairs = corpus.read_pair_manifest(_require(out_dir / "pairs.tsv",
                                               "pair"))
    out = []
    for pair in pairs:
        for side in ("a", "b"):
            relpath = pair.path_a if side == "a" else pair.path_b
            stream_file = _require(_stream_path(out_dir, side, relpath),
                                   "normalize")
            element_file = _require(_elements_path(out_dir, side, relpath),
                                    "normalize")
            _, _, tokens = read_stream(stream_file)
            ordinals = {"expression": 0, "statement": 0, "method": 0}
            for element in read_elements(element_file):
                ordinal = ordinals[element.granularity]
                ordinals[element.granularity] += 1
                element_id = (f"{side}:{relpath}:"
                              f"{element.granularity}:{ordinal}")
                tagged = [f"{side}:{tokens[k]}"
                          for k in element.token_indices]
                out.append((element_id, tagged))
    return out


def stage_compose(cfg, out_dir, prov):
    t0 = time.perf_counter()
    table, vocab = embed.load_embeddings(
        _require(out_dir / "embeddings.txt", "train"))
    elements = _load_elements(cfg, out_dir)
    idf = None
    if cfg.weighting == "tfidf":
        idf = hier.build_idf(tokens for _, tokens in elements)
    ids, matrix, coverages, skipped = hier.compose_corpus(
        elements, vocab, table.input_vecs, cfg.weighting, idf)
    hier.write_element_embeddings(out_dir / "element_vecs.txt", ids,
                                  matrix, coverages, cfg.weighting,
                                  comments=(prov,))
    hier.write_skips(out_dir / "compose_skips.tsv", skipped,
                     comments=(prov,))
    _summary("compose", f"{len(ids)} elements embedded "
             f"({cfg.weighting}), {len(skipped)} skipped", t0)


def stage_map(cfg, out_dir, prov, k=None):
    t0 = time.perf_counter()
    k = cfg.k if k is None else k
    if cfg.granularity == "token":
        table, vocab = embed.load_embeddings(
            _require(out_dir / "embeddings.txt", "train"))
        ids = list(vocab.tokens)
        matrix = table.input_vecs
    else:
        all_ids, matrix, _, _ = hier.read_element_embeddings(
            _require(out_dir / "element_vecs.txt", "compose"))
        keep = [row for row, element_id in enumerate(all_ids)
                if element_id.rsplit(":", 2)[1] == cfg.granularity]
        ids = [all_ids[row] for row in keep]
        matrix = matrix[keep]
    query_side = cfg.side[0]
    queries = []
    zero_skipped = 0
    for row, element_id in enumerate(ids):
        if retrieve.element_side(element_id) != query_side:
            continue
        vector = tuple(matrix[row])
        if not any(vector):
            zero_skipped += 1
            continue
        queries.append(retrieve.Query(element_id, vector, cfg.side, k))
    rankings = retrieve.run_queries(queries, ids, matrix)
    mapping_dir = out_dir / "mappings"
    mapping_dir.mkdir(parents=True, exist_ok=True)
    retrieve.write_rankings(mapping_dir / f"{cfg.granularity}.tsv",
                            rankings, comments=(prov,))
    note = f", {zero_skipped} zero-vector queries skipped" \
        if zero_skipped else ""
    _summary("map", f"{len(queries)} {cfg.granularity} queries "
             f"({cfg.side}), top-{k}{note}", t0)
    return rankings


def stage_eval(cfg, out_dir, prov):
    t0 = time.perf_counter()
    if cfg.truth is None:
        raise MissingArtifact("no retrieve.truth configured; nothing to "
                              "evaluate")
    rankings = retrieve.read_rankings(
        _require(out_dir / "mappings" / f"{cfg.granularity}.tsv", "map"))
    truth = retrieve.read_truth(_require(cfg.truth, "nothing (supply the "
                                         "ground-truth file)"))
    report = retrieve.evaluate_map(rankings, truth, cfg.ks)
    retrieve.write_report(out_dir / "report.tsv", report,
                          comments=(prov,))
    metrics = " ".join(f"map@{k}={report.map_at_k[k]:.3f}"
                       for k in sorted(report.map_at_k))
    _summary("eval", f"{report.n_queries} queries, {metrics}, "
             f"p@1={report.precision_at_1:.3f}", t0)
    return report


def stage_diff_ref(cfg, out_dir, prov):
    t0 = time.perf_counter()
    if cfg.reference is None:
        raise MissingArtifact("no retrieve.reference configured; nothing "
                              "to compare")
    rankings = retrieve.read_rankings(
        _require(out_dir / "mappings" / f"{cfg.granularity}.tsv", "map"))
    reference = retrieve.read_reference(
        _require(cfg.reference, "nothing (supply the reference file)"))
    diff = retrieve.diff_reference(rankings, reference)
    retrieve.write_diff(out_dir / "diff.tsv", diff, comments=(prov,))
    _summary("diff-ref", f"{len(diff['new'])} new, "
             f"{len(diff['agreeing'])} agreeing, "
             f"{len(diff['conflicting'])} conflicting", t0)
    return diff


def run_all(cfg, out_dir, prov, threads=1, k=None):
    stage_pair(cfg, out_dir, prov)
    stage_normalize(cfg, out_dir, prov)
    stage_align(cfg, out_dir, prov, threads)
    stage_train(cfg, out_dir, prov, threads)
    stage_compose(cfg, out_dir, prov)
    stage_map(cfg, out_dir, prov, k)
    if cfg.truth is not None:
        stage_eval(cfg, out_dir, prov)
    if cfg.reference is not None:
        stage_diff_ref(cfg, out_dir, prov)


# ---------------------------------------------------------------------------
# argument handling


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


SUBCOMMANDS = ("pair", "normalize", "align", "train", "compose", "map",
               "eval", "diff-ref", "run-all")


def _build_parser():
    parser = _Parser(prog="codemap",
                     description="Cross-language code mapping pipeline.")
    parser.add_argument("--version", action="version",
                        version=f"codemap {__version__}")
    commands = parser.add_subparsers(dest="command", required=True,
                                     parser_class=_Parser)
    for name in SUBCOMMANDS:
        sub = commands.add_parser(name)
        sub.add_argument("--config", required=True,
                         help="pipeline config file")
        sub.add_argument("--out-dir", default="codemap-out",
                         help="artifact directory (default codemap-out)")
        sub.add_argument("--seed", type=int, default=None,
                         help="override train.seed")
        sub.add_argument("--threads", type=int, default=1,
                         help="parallel workers for align/train")
        sub.add_argument("--k", type=int, default=None,
                         help="override retrieve.k for map")
    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as status:
        return status.code if isinstance(status.code, int) else 0
    try:
        cfg = parse_config(args.config, seed=args.seed)
        prov = provenance(config_hash(args.config), cfg.train.seed)
        out_dir = Path(args.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        if args.threads < 1:
            raise ValueError("--threads must be at least 1")
        if args.k is not None and args.k < 1:
            raise ValueError("--k must be at least 1")
        if args.command == "pair":
            stage_pair(cfg, out_dir, prov)
        elif args.command == "normalize":
            stage_normalize(cfg, out_dir, prov)
        elif args.command == "align":
            stage_align(cfg, out_dir, prov, args.threads)
        elif args.command == "train":
            stage_train(cfg, out_dir, prov, args.threads)
        elif args.command == "compose":
            stage_compose(cfg, out_dir, prov)
        elif args.command == "map":
            stage_map(cfg, out_dir, prov, args.k)
        elif args.command == "eval":
            stage_eval(cfg, out_dir, prov)
        elif args.command == "diff-ref":
            stage_diff_ref(cfg, out_dir, prov)
        else:
            run_all(cfg, out_dir, prov, args.threads, args.k)
    except MissingArtifact as err:
        print(f"codemap: {err}", file=sys.stderr)
        return 2
    except OSError as err:
        print(f"codemap: {err}", file=sys.stderr)
        return 2
    except (ValueError, ParseError) as err:
        print(f"codemap: {err}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point: one subcommand per pipeline stage.

Everything prints JSON lines on stdout (DOT behind a flag), so stages pipe
into each other and into external tools; outputs are byte-stable across
runs given the same inputs and oracle cache.
"""

from __future__ import annotations

import argparse
import json
import sys

from .compare import build_representation, diff_vector
from .config import Config, load_config, load_lexicon, make_oracle
from .graph import export_dot, export_json_dict, validate
from .harness import (
    ModelBundle,
    PairCorpus,
    cognitive_report,
    compute_vectors,
    evaluate,
    load_score_buckets,
    load_sickr_tsv,
    load_stsb_jsonl,
    predict_score,
    select_single_dimension_pairs,
    train_models,
)
from .oracle import OracleUnavailable
from .parsing import frame_to_dict, parse_dimensions
from .splitting import split_recursive
from .tokens import ConlluError, SentenceStructureError, load_conllu, load_label_aliases

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_ORACLE = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        sys.exit(EXIT_INPUT)


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


_ALIASES = None


def _load_sentences(path: str):
    with open(path, encoding="utf-8") as f:
        return load_conllu(f, aliases=_ALIASES)


def _load_records(path: str, fmt: str):
    if fmt == "sickr":
        return load_sickr_tsv(path)
    return load_stsb_jsonl(path)


def _corpus(args) -> PairCorpus:
    records = _load_records(args.dataset, args.format)
    return PairCorpus.load(records, args.conllu, aliases=_ALIASES)


def cmd_split(args, cfg: Config) -> int:
    for sentence in _load_sentences(args.conllu):
        tree = split_recursive(sentence)
        _emit(
            {
                "sentence_id": sentence.sentence_id,
                "propositions": [leaf.text for leaf in tree.leaves],
                "degraded": tree.degraded,
            }
        )
    return EXIT_OK


def cmd_parse_dims(args, cfg: Config) -> int:
    for sentence in _load_sentences(args.conllu):
        tree = split_recursive(sentence)
        _emit(
            {
                "sentence_id": sentence.sentence_id,
                "frames": [frame_to_dict(parse_dimensions(leaf)) for leaf in tree.leaves],
            }
        )
    return EXIT_OK


def cmd_build(args, cfg: Config) -> int:
    lex = load_lexicon(cfg)
    for sentence in _load_sentences(args.conllu):
        rep = build_representation(sentence, lex)
        if args.dot:
            sys.stdout.write(export_dot(rep.graph))
        else:
            payload = export_json_dict(rep.graph)
            payload["sentence_id"] = sentence.sentence_id
            payload["valid"] = not validate(rep.graph)
            _emit(payload)
    return EXIT_OK


def cmd_compare(args, cfg: Config) -> int:
    lex = load_lexicon(cfg)
    oracle = make_oracle(cfg, args.oracle_cache)
    hi, lo, pod = cfg.thresholds.code_hi, cfg.thresholds.code_lo, cfg.thresholds.pod
    if args.pair:
        sentences = _load_sentences(args.pair)
        if len(sentences) != 2:
            raise ValueError(f"--pair file must hold exactly 2 sentences, got {len(sentences)}")
        rep1 = build_representation(sentences[0], lex)
        rep2 = build_representation(sentences[1], lex)
        vec = diff_vector(rep1, rep2, oracle, hi, lo, pod)
        _emit(
            {
                "pair_id": f"{sentences[0].sentence_id}|{sentences[1].sentence_id}",
                "pair_kind": vec.pair_kind.value,
                "codes": list(vec.codes),
            }
        )
        return EXIT_OK
    corpus = _corpus(args)
    vectors = compute_vectors(
        corpus,
        lex,
        oracle,
        split=args.split,
        jobs=args.jobs,
        code_hi=hi,
        code_lo=lo,
        pod_threshold=pod,
    )
    for pv in vectors:
        _emit(
            {
                "pair_id": pv.pair_id,
                "pair_kind": pv.pair_kind.value if pv.pair_kind else None,
                "codes": list(pv.codes) if pv.codes else None,
                "degraded": pv.degraded,
            }
        )
    return EXIT_OK


def cmd_train(args, cfg: Config) -> int:
    lex = load_lexicon(cfg)
    oracle = make_oracle(cfg, args.oracle_cache)
    corpus = _corpus(args)
    vectors = compute_vectors(
        corpus,
        lex,
        oracle,
        split=args.split,
        jobs=args.jobs,
        code_hi=cfg.thresholds.code_hi,
        code_lo=cfg.thresholds.code_lo,
        pod_threshold=cfg.thresholds.pod,
    )
    models = train_models(
        vectors, min_samples_leaf=cfg.cart.min_samples_leaf, seed=cfg.cart.seed
    )
    with open(args.model_out, "w", encoding="utf-8") as f:
        f.write(models.to_json())
    usable = sum(1 for v in vectors if v.codes is not None and not v.degraded)
    _emit({"trained_on": usable, "skipped": len(vectors) - usable, "model": args.model_out})
    return EXIT_OK


def cmd_evaluate(args, cfg: Config) -> int:
    lex = load_lexicon(cfg)
    oracle = make_oracle(cfg, args.oracle_cache)
    corpus = _corpus(args)
    vectors = compute_vectors(
        corpus,
        lex,
        oracle,
        split=args.split,
        jobs=args.jobs,
        code_hi=cfg.thresholds.code_hi,
        code_lo=cfg.thresholds.code_lo,
        pod_threshold=cfg.thresholds.pod,
    )
    if not vectors:
        print("warning: no records to evaluate", file=sys.stderr)
        _emit({"evaluated": 0, "degraded": 0})
        return EXIT_OK
    with open(args.model_in, encoding="utf-8") as f:
        models = ModelBundle.from_json(f.read())
    report = evaluate(vectors, models)
    if args.predictions:
        with open(args.predictions, "w", encoding="utf-8") as f:
            for pv in vectors:
                if pv.codes is None or pv.degraded:
                    continue
                pred = predict_score(models, pv)
                f.write(
                    json.dumps(
                        {"pair_id": pv.pair_id, "predicted": pred, "score": pv.score},
                        sort_keys=True,
                    )
                    + "\n"
                )
    _emit(report)
    return EXIT_OK


def cmd_analyze_cognitive(args, cfg: Config) -> int:
    center = args.levene_center or cfg.cart.levene_center
    if args.buckets:
        buckets = load_score_buckets(args.buckets)
    else:
        lex = load_lexicon(cfg)
        oracle = make_oracle(cfg, args.oracle_cache)
        corpus = _corpus(args)
        vectors = compute_vectors(
            corpus,
            lex,
            oracle,
            split=args.split,
            jobs=args.jobs,
            code_hi=cfg.thresholds.code_hi,
            code_lo=cfg.thresholds.code_lo,
            pod_threshold=cfg.thresholds.pod,
        )
        if args.genre:
            vectors = [pv for pv in vectors if pv.genre == args.genre]
        selected = select_single_dimension_pairs(vectors)
        buckets = {name: [pv.score for pv in pvs] for name, pvs in selected.items()}
    _emit(cognitive_report(buckets, levene_center=center, u_method=args.u_method))
    return EXIT_OK


def _add_corpus_args(sub, need_model_out=False, need_model_in=False):
    sub.add_argument("--dataset", help="dataset file (jsonl or tsv)")
    sub.add_argument("--format", choices=("stsb", "sickr"), default="stsb")
    sub.add_argument("--conllu", help="parsed sentences, ids <pair>#1 / <pair>#2")
    sub.add_argument("--split", default=None, help="restrict to a dataset split")
    sub.add_argument("--jobs", type=int, default=1)
    sub.add_argument("--oracle-cache", default=None, help="override cache path")
    if need_model_out:
        sub.add_argument("--model-out", required=True)
    if need_model_in:
        sub.add_argument("--model-in", required=True)


def build_parser() -> _Parser:
    parser = _Parser(prog="propnet", description=__doc__)
    parser.add_argument("--config", default=None, help="INI config file")
    parser.add_argument(
        "--aliases", default=None, help="two-column dependency-label alias file"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("split", help="ordered proposition list per sentence")
    sub.add_argument("--conllu", required=True)

    sub = commands.add_parser("parse-dims", help="dimension frames per proposition")
    sub.add_argument("--conllu", required=True)

    sub = commands.add_parser("build", help="proposition graph per sentence")
    sub.add_argument("--conllu", required=True)
    sub.add_argument("--dot", action="store_true", help="DOT instead of JSON")

    sub = commands.add_parser("compare", help="difference vectors for pairs")
    sub.add_argument("--pair", help="CoNLL-U file holding exactly two sentences")
    _add_corpus_args(sub)

    sub = commands.add_parser("train", help="fit the two CART models")
    _add_corpus_args(sub, need_model_out=True)
    sub.set_defaults(split="train")

    sub = commands.add_parser("evaluate", help="correlation report on a split")
    _add_corpus_args(sub, need_model_in=True)
    sub.add_argument("--predictions", default=None, help="also dump per-pair predictions")
    sub.set_defaults(split="test")

    sub = commands.add_parser("analyze-cognitive", help="single-dimension pair statistics")
    _add_corpus_args(sub)
    sub.add_argument("--buckets", help="TSV of (dimension, score) rows instead of a dataset")
    sub.add_argument("--genre", default=None)
    sub.add_argument("--levene-center", choices=("median", "mean"), default=None)
    sub.add_argument("--u-method", choices=("asymptotic", "exact"), default="asymptotic")
    return parser


HANDLERS = {
    "split": cmd_split,
    "parse-dims": cmd_parse_dims,
    "build": cmd_build,
    "compare": cmd_compare,
    "train": cmd_train,
    "evaluate": cmd_evaluate,
    "analyze-cognitive": cmd_analyze_cognitive,
}


def main(argv: list[str] | None = None) -> int:
    global _ALIASES
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config)
        _ALIASES = load_label_aliases(args.aliases) if args.aliases else None
        return HANDLERS[args.command](args, cfg)
    except OracleUnavailable as exc:
        print(f"oracle error: {exc}", file=sys.stderr)
        return EXIT_ORACLE
    except (ConlluError, SentenceStructureError, FileNotFoundError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

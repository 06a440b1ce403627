"""parse-adapter: batch-convert text or dataset files into CoNLL-U, and
export hypernym lexicon snapshots for the downstream pipeline."""

from __future__ import annotations

import argparse
import json
import sys

from .backends import ParserUnavailable, make_backend
from .conllu import block, write_blocks
from .lexicon import LexicalDatabaseUnavailable, export_lexicon


def iter_sentences(path: str, fmt: str):
    """Yield (sentence_id, text) pairs; dataset rows yield two sentences."""
    if fmt == "raw":
        with open(path, encoding="utf-8") as f:
            counter = 0
            for line in f:
                text = line.strip()
                if not text:
                    continue
                counter += 1
                yield f"raw-{counter:06d}", text
    elif fmt == "stsb":
        with open(path, encoding="utf-8") as f:
            for lineno, line in enumerate(f, start=1):
                line = line.strip()
                if not line:
                    continue
                row = json.loads(line)
                pid = str(row.get("pair_id", row.get("idx", lineno)))
                yield f"{pid}#1", row["sentence1"]
                yield f"{pid}#2", row["sentence2"]
    elif fmt == "sickr":
        with open(path, encoding="utf-8") as f:
            header = f.readline().rstrip("\n").split("\t")
            col = {name: i for i, name in enumerate(header)}
            for lineno, line in enumerate(f, start=2):
                line = line.rstrip("\n")
                if not line:
                    continue
                parts = line.split("\t")
                pid = parts[col["pair_ID"]] if "pair_ID" in col else str(lineno)
                yield f"{pid}#1", parts[col["sentence_A"]]
                yield f"{pid}#2", parts[col["sentence_B"]]
    else:
        raise ValueError(f"unknown format {fmt!r}")


def run_parse(args) -> int:
    backend = make_backend(args.parser)
    blocks = []
    nouns: set[str] = set()
    for sent_id, text in iter_sentences(args.infile, args.format):
        rows = backend.parse_sentence(text)
        blocks.append(block(sent_id, text, rows))
        for row in rows:
            if row.upos in ("NOUN", "PROPN"):
                nouns.add(row.lemma.lower())
    write_blocks(blocks, args.out)
    print(f"wrote {len(blocks)} sentences to {args.out} ({backend.name})", file=sys.stderr)
    if args.export_lexicon:
        count = export_lexicon(nouns, args.export_lexicon, source=args.lexicon_source)
        print(f"wrote {count} lexicon rows to {args.export_lexicon}", file=sys.stderr)
    return 0


def run_export_only(args) -> int:
    words = []
    with open(args.words, encoding="utf-8") as f:
        for line in f:
            word = line.strip()
            if word:
                words.append(word)
    count = export_lexicon(words, args.export_lexicon, source=args.lexicon_source)
    print(f"wrote {count} lexicon rows to {args.export_lexicon}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="parse-adapter", description=__doc__)
    parser.add_argument("--in", dest="infile", help="input file")
    parser.add_argument("--format", choices=("raw", "stsb", "sickr"), default="raw")
    parser.add_argument("--out", help="CoNLL-U output path")
    parser.add_argument(
        "--parser",
        default="builtin",
        help="builtin, spacy, or spacy:<model>",
    )
    parser.add_argument("--export-lexicon", help="also write a lemma/flag TSV here")
    parser.add_argument(
        "--lexicon-source", choices=("auto", "wordnet", "bundled"), default="auto"
    )
    parser.add_argument("--words", help="word list input for a lexicon-only run")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.infile and args.out:
            return run_parse(args)
        if args.export_lexicon and args.words:
            return run_export_only(args)
    except (ParserUnavailable, LexicalDatabaseUnavailable) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError, KeyError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    build_parser().print_usage(sys.stderr)
    return 1


if __name__ == "__main__":
    sys.exit(main())

"""Hypernym lookups and lexicon export.

The physical-entity flag for a noun comes from the hypernym closure: the
bundled snapshot is a small curated hypernym graph; when an nltk WordNet
corpus is importable it takes over as the database.
"""

from __future__ import annotations

from importlib import resources


class LexicalDatabaseUnavailable(RuntimeError):
    pass


class BundledHypernyms:
    """child -> parents edges from the packaged snapshot."""

    name = "bundled"

    def __init__(self) -> None:
        ref = resources.files("parse_adapter").joinpath("data/hypernyms.tsv")
        self.parents: dict[str, set[str]] = {}
        for raw in ref.read_text(encoding="utf-8").splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            child, parent = line.split("\t")
            self.parents.setdefault(child, set()).add(parent)

    def knows(self, lemma: str) -> bool:
        return lemma in self.parents

    def is_physical_entity(self, lemma: str) -> bool:
        seen: set[str] = set()
        frontier = [lemma]
        while frontier:
            word = frontier.pop()
            if word == "physical_entity":
                return True
            if word in seen:
                continue
            seen.add(word)
            frontier.extend(self.parents.get(word, ()))
        return False


class WordnetHypernyms:
    name = "wordnet"

    def __init__(self) -> None:
        try:
            from nltk.corpus import wordnet
        except ImportError as exc:
            raise LexicalDatabaseUnavailable("nltk is not installed") from exc
        try:
            wordnet.synsets("entity")
        except LookupError as exc:
            raise LexicalDatabaseUnavailable("wordnet corpus not downloaded") from exc
        self.wordnet = wordnet

    def knows(self, lemma: str) -> bool:
        return bool(self.wordnet.synsets(lemma, pos=self.wordnet.NOUN))

    def is_physical_entity(self, lemma: str) -> bool:
        target = "physical_entity.n.01"
        for synset in self.wordnet.synsets(lemma, pos=self.wordnet.NOUN):
            closure = {s.name() for s in synset.closure(lambda s: s.hypernyms())}
            if target in closure:
                return True
        return False


def open_database(source: str = "auto"):
    if source == "wordnet":
        return WordnetHypernyms()
    if source == "bundled":
        return BundledHypernyms()
    if source == "auto":
        try:
            return WordnetHypernyms()
        except LexicalDatabaseUnavailable:
            return BundledHypernyms()
    raise LexicalDatabaseUnavailable(f"unknown lexical database {source!r}")


def export_lexicon(noun_lemmas, out_path: str, source: str = "auto") -> int:
    """Write `lemma<TAB>flag` for every known noun lemma; returns the count.

    Lemmas the database has never heard of are left out, so the consumer
    falls back to its configured default for them.
    """
    db = open_database(source)
    rows = []
    for lemma in sorted(set(l.lower() for l in noun_lemmas)):
        if not db.knows(lemma):
            continue
        rows.append((lemma, 1 if db.is_physical_entity(lemma) else 0))
    with open(out_path, "w", encoding="utf-8") as f:
        for lemma, flag in rows:
            f.write(f"{lemma}\t{flag}\n")
    return len(rows)

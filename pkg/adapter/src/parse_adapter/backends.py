"""Parser backends: the built-in heuristic one, and spaCy when present."""

from __future__ import annotations

from .parser import Parsed, parse
from .tagger import tag, tokenize


class ParserUnavailable(RuntimeError):
    pass


class BuiltinBackend:
    """Deterministic rule-based tagger+parser, no external models."""

    name = "builtin"

    def parse_sentence(self, text: str) -> list[Parsed]:
        return parse(tag(tokenize(text)))


class SpacyBackend:
    """Wraps a spaCy pipeline, mapping its annotations straight through."""

    def __init__(self, model: str = "en_core_web_sm"):
        try:
            import spacy
        except ImportError as exc:
            raise ParserUnavailable("spacy is not installed") from exc
        try:
            self.nlp = spacy.load(model)
        except OSError as exc:
            raise ParserUnavailable(f"spacy model {model!r} not available") from exc
        self.name = f"spacy:{model}"

    def parse_sentence(self, text: str) -> list[Parsed]:
        doc = self.nlp(text)
        rows = []
        for token in doc:
            head = 0 if token.head is token else token.head.i + 1
            dep = "root" if token.dep_ == "ROOT" else token.dep_
            rows.append(
                Parsed(
                    form=token.text,
                    lemma=token.lemma_,
                    upos=token.pos_,
                    head=head,
                    dep=dep,
                )
            )
        return rows


def make_backend(spec: str):
    if spec == "builtin":
        return BuiltinBackend()
    if spec == "spacy" or spec.startswith("spacy:"):
        model = spec.split(":", 1)[1] if ":" in spec else "en_core_web_sm"
        return SpacyBackend(model)
    raise ParserUnavailable(f"unknown parser backend {spec!r}")

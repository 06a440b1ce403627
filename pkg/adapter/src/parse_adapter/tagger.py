"""Tokenizer, POS tagger and lemmatizer for the built-in backend.

Closed classes come from word lists; verbs and adjectives from inflection
tables; everything else defaults to NOUN.  Noun/verb ambiguity resolves on
local context (a determiner or adjective to the left forces the nominal
reading, an auxiliary forces the verbal one).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import words

TOKEN_RE = re.compile(r"[A-Za-z]+(?:'[A-Za-z]+)?|\d+(?:[.,]\d+)*|[^\sA-Za-z\d]")

CLITICS = ("n't", "'s", "'re", "'ve", "'ll", "'d", "'m")


@dataclass
class Tagged:
    form: str
    lemma: str
    upos: str


def tokenize(text: str) -> list[str]:
    out = []
    for piece in TOKEN_RE.findall(text):
        lower = piece.lower()
        split_at = next(
            (c for c in CLITICS if lower.endswith(c) and len(lower) > len(c)), None
        )
        if split_at is not None:
            out.append(piece[: -len(split_at)])
            out.append(piece[-len(split_at):])
        else:
            out.append(piece)
    return out


def _is_verb_form(word: str) -> bool:
    return word in words.VERB_TABLE


def _closed_class(word: str) -> tuple[str, str] | None:
    if word in words.POSSESSIVES:
        return "PRON", word
    if word in words.DETERMINERS:
        return "DET", word
    if word in words.NUMBER_WORDS or word.isdigit():
        return "NUM", word
    if word in words.COORDINATORS:
        return "CCONJ", word
    if word in words.SUBORDINATORS:
        return "SCONJ", word
    if word in words.PREPOSITIONS:
        return "ADP", word
    if word in words.PRONOUNS:
        return "PRON", word
    if word in words.ADVERBS:
        return "ADV", word
    return None


def tag(tokens: list[str]) -> list[Tagged]:
    tagged: list[Tagged] = []
    saw_verb = False
    for i, form in enumerate(tokens):
        word = form.lower()
        prev = tagged[-1] if tagged else None

        if not any(c.isalnum() for c in form):
            tagged.append(Tagged(form, form, "PUNCT"))
            continue
        if word == "to":
            nxt = tokens[i + 1].lower() if i + 1 < len(tokens) else ""
            if nxt in words.VERB_TABLE and words.VERB_TABLE[nxt] == nxt:
                tagged.append(Tagged(form, "to", "PART"))
            else:
                tagged.append(Tagged(form, "to", "ADP"))
            continue
        if word in ("not", "n't"):
            tagged.append(Tagged(form, "not", "PART"))
            continue
        if word in words.AUXILIARIES:
            lemma = words.AUX_LEMMA.get(word, word)
            nominal_left = prev is not None and prev.upos in ("DET", "ADJ", "NUM")
            if not nominal_left:
                tagged.append(Tagged(form, lemma, "AUX"))
                saw_verb = True
                continue

        closed = _closed_class(word)
        verbish = _is_verb_form(word)
        adjish = word in words.ADJECTIVES

        if verbish:
            nominal_left = prev is not None and (
                prev.upos in ("DET", "ADJ", "NUM") or prev.lemma in words.POSSESSIVES
            )
            aux_left = prev is not None and prev.upos in ("AUX", "PART")
            if aux_left or (not nominal_left and (closed is None or not saw_verb)):
                tagged.append(Tagged(form, words.VERB_TABLE[word], "VERB"))
                saw_verb = True
                continue
        if closed is not None:
            upos, lemma = closed
            tagged.append(Tagged(form, lemma, upos))
            continue
        if adjish:
            tagged.append(Tagged(form, word, "ADJ"))
            continue
        if word.endswith("ly") and len(word) > 4:
            tagged.append(Tagged(form, word, "ADV"))
            continue
        upos = "PROPN" if form[0].isupper() and tagged else "NOUN"
        tagged.append(Tagged(form, words.noun_lemma(word), upos))
    return tagged

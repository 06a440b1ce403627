"""CoNLL-U ingestion and verb-count typing of sentences and pairs.

The canonical annotation scheme is the spaCy one (dobj, relcl, pcomp,
prepositions heading their objects).  Files written against plain UD labels
are folded into it through a small alias table at load time.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from functools import cached_property
from typing import Iterable, TextIO

VERB_TAGS = frozenset({"VERB", "AUX"})
NOUN_TAGS = frozenset({"NOUN", "PRON", "PROPN", "NUM"})

# Dependency functions that mark a VERB/AUX token as an auxiliary of another
# verb, so the group counts once ("is" in "is playing").
AUXILIARY_LABELS = frozenset({"aux", "auxpass"})

# Placeholder forms left in a main proposition where a subordinate clause was
# cut out; they behave like nouns downstream and are linked up when merging.
CLAUSE_IDENTIFIER_FORMS = frozenset({
    "identifier_ccomp",
    "identifier_pcomp",
    "xcomp_identifier",
    "identifier_csubj",
    "identifier_advcl",
})

DEFAULT_LABEL_ALIASES = {
    "obj": "dobj",
    "iobj": "dative",
    "acl:relcl": "relcl",
    "nsubj:pass": "nsubjpass",
    "aux:pass": "auxpass",
    "csubj:pass": "csubjpass",
    "obl:agent": "agent",
    "nmod:poss": "poss",
    "compound:prt": "prt",
    "ROOT": "root",
}


class ConlluError(ValueError):
    """Malformed CoNLL-U input; carries the offending line number."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class SentenceStructureError(ValueError):
    """Head indices do not form a tree; carries the sentence id."""

    def __init__(self, message: str, sentence_id: str):
        super().__init__(f"sentence {sentence_id!r}: {message}")
        self.sentence_id = sentence_id


@dataclass(frozen=True)
class Token:
    """One annotated token.

    ``uid`` tracks word identity across splitting: copies spliced into a
    subordinate proposition keep the uid of the token they were copied from,
    while synthesized tokens (inserted "be", clause identifiers) get fresh
    uids and ``inserted=True``.
    """

    index: int
    form: str
    lemma: str
    upos: str
    dep_label: str
    head_index: int
    uid: int = 0
    inserted: bool = False

    @property
    def is_punct(self) -> bool:
        return self.upos == "PUNCT"

    @property
    def is_identifier(self) -> bool:
        return self.form in CLAUSE_IDENTIFIER_FORMS

    def with_(self, **changes) -> "Token":
        return replace(self, **changes)


@dataclass(frozen=True)
class AnnotatedSentence:
    tokens: tuple[Token, ...]
    source_text: str = ""
    sentence_id: str = ""

    @cached_property
    def by_index(self) -> dict[int, Token]:
        return {t.index: t for t in self.tokens}

    @cached_property
    def children(self) -> dict[int, tuple[Token, ...]]:
        kids: dict[int, list[Token]] = {t.index: [] for t in self.tokens}
        kids[0] = []
        for t in self.tokens:
            kids.setdefault(t.head_index, []).append(t)
        return {i: tuple(ts) for i, ts in kids.items()}

    @property
    def root(self) -> Token:
        return next(t for t in self.tokens if t.head_index == 0)

    def subtree(self, token: Token) -> list[Token]:
        """Token plus all dependents, in document order."""
        out = []
        stack = [token]
        while stack:
            t = stack.pop()
            out.append(t)
            stack.extend(self.children.get(t.index, ()))
        return sorted(out, key=lambda t: t.index)

    @property
    def text(self) -> str:
        if self.source_text:
            return self.source_text
        return " ".join(t.form for t in self.tokens if not t.is_punct)


class SentenceKind(Enum):
    PROP0 = "Prop0"
    PROP1 = "Prop1"
    PROP2 = "Prop2"
    PROP3_PLUS = "Prop3+"


class PairKind(Enum):
    P1_MINUS = "P1-"
    P2 = "P2"
    P3_PLUS = "P3+"


def count_verb_groups(tokens: Iterable[Token]) -> int:
    """Number of verb groups: VERB/AUX tokens minus pure auxiliaries.

    Linking verbs count (a bare copula is a group of its own); an auxiliary
    attached to another verb counts with that verb's group.
    """
    return sum(
        1
        for t in tokens
        if t.upos in VERB_TAGS and t.dep_label not in AUXILIARY_LABELS
    )


def classify_sentence(sentence: AnnotatedSentence) -> SentenceKind:
    return classify_verb_count(count_verb_groups(sentence.tokens))


def classify_verb_count(n: int) -> SentenceKind:
    if n == 0:
        return SentenceKind.PROP0
    if n == 1:
        return SentenceKind.PROP1
    if n == 2:
        return SentenceKind.PROP2
    return SentenceKind.PROP3_PLUS


def classify_pair(k1: SentenceKind, k2: SentenceKind) -> PairKind:
    kinds = {k1, k2}
    if SentenceKind.PROP3_PLUS in kinds:
        return PairKind.P3_PLUS
    if SentenceKind.PROP2 in kinds:
        return PairKind.P2
    return PairKind.P1_MINUS


def load_label_aliases(path: str) -> dict[str, str]:
    """Two-column plain-text file: <label-in-file> <canonical-label>."""
    aliases = dict(DEFAULT_LABEL_ALIASES)
    with open(path, encoding="utf-8") as f:
        for raw in f:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"alias line needs two columns: {line!r}")
            aliases[parts[0]] = parts[1]
    return aliases


def _validate_structure(tokens: list[Token], sentence_id: str) -> None:
    n = len(tokens)
    for pos, t in enumerate(tokens, start=1):
        if t.index != pos:
            raise SentenceStructureError(
                f"token indices not contiguous at position {pos}", sentence_id
            )
    roots = [t for t in tokens if t.head_index == 0]
    if len(roots) != 1:
        raise SentenceStructureError(f"{len(roots)} root tokens", sentence_id)
    for t in tokens:
        if t.head_index == t.index:
            raise SentenceStructureError(
                f"token {t.index} is its own head", sentence_id
            )
        if not 0 <= t.head_index <= n:
            raise SentenceStructureError(
                f"token {t.index} head {t.head_index} out of range", sentence_id
            )
    # Every token must reach the root; a cycle never does.
    for t in tokens:
        seen = set()
        cur = t.index
        while cur != 0:
            if cur in seen:
                raise SentenceStructureError(
                    f"cycle through token {t.index}", sentence_id
                )
            seen.add(cur)
            cur = tokens[cur - 1].head_index


def load_conllu(
    source: str | TextIO, aliases: dict[str, str] | None = None
) -> list[AnnotatedSentence]:
    """Parse CoNLL-U text into annotated sentences.

    Ten tab-separated columns per token line; ID, FORM, LEMMA, UPOS, HEAD and
    DEPREL are used, the rest are ignored.  Multiword-token ranges and empty
    nodes are skipped.  Blank lines separate sentences.
    """
    if aliases is None:
        aliases = DEFAULT_LABEL_ALIASES
    text = source if isinstance(source, str) else source.read()

    sentences: list[AnnotatedSentence] = []
    tokens: list[Token] = []
    sent_id = ""
    sent_text = ""
    ordinal = 0

    def flush(line_number: int) -> None:
        nonlocal tokens, sent_id, sent_text, ordinal
        if not tokens:
            sent_id = ""
            sent_text = ""
            return
        ordinal += 1
        sid = sent_id or f"s{ordinal}"
        _validate_structure(tokens, sid)
        sentences.append(
            AnnotatedSentence(tokens=tuple(tokens), source_text=sent_text, sentence_id=sid)
        )
        tokens = []
        sent_id = ""
        sent_text = ""

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\n")
        if not line.strip():
            flush(lineno)
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("sent_id"):
                sent_id = body.split("=", 1)[1].strip() if "=" in body else ""
            elif body.startswith("text"):
                sent_text = body.split("=", 1)[1].strip() if "=" in body else ""
            continue
        cols = line.split("\t")
        if len(cols) != 10:
            raise ConlluError(
                f"expected 10 tab-separated columns, got {len(cols)}", lineno
            )
        tok_id, form, lemma, upos, _, _, head, deprel, _, _ = cols
        if "-" in tok_id or "." in tok_id:
            continue
        try:
            index = int(tok_id)
        except ValueError:
            raise ConlluError(f"bad token id {tok_id!r}", lineno) from None
        try:
            head_index = int(head)
        except ValueError:
            raise ConlluError(f"bad head index {head!r}", lineno) from None
        dep = aliases.get(deprel, deprel)
        tokens.append(
            Token(
                index=index,
                form=form,
                lemma=lemma,
                upos=upos,
                dep_label=dep,
                head_index=head_index,
                uid=index,
            )
        )
    flush(len(text.splitlines()) + 1)
    return sentences


def serialize_conllu(sentences: Iterable[AnnotatedSentence]) -> str:
    """Write sentences back out; lossless for the columns the loader uses."""
    blocks = []
    for s in sentences:
        lines = []
        if s.sentence_id:
            lines.append(f"# sent_id = {s.sentence_id}")
        if s.source_text:
            lines.append(f"# text = {s.source_text}")
        for t in s.tokens:
            lines.append(
                "\t".join(
                    [
                        str(t.index),
                        t.form,
                        t.lemma,
                        t.upos,
                        "_",
                        "_",
                        str(t.head_index),
                        t.dep_label,
                        "_",
                        "_",
                    ]
                )
            )
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + ("\n" if blocks else "")

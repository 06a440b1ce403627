"""Clause-based decomposition of multi-verb sentences into propositions.

A Prop2 sentence splits into a main and a subordinate proposition according
to the dependency label of the subordinate verb.  Longer sentences are
decomposed by repeatedly peeling off the leftmost subordinate clause that is
itself a single proposition, which yields a binary tree whose leaves are the
ordered Prop0/Prop1 propositions of the sentence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .tokens import (
    AnnotatedSentence,
    NOUN_TAGS,
    Token,
    VERB_TAGS,
    classify_verb_count,
    count_verb_groups,
)


class UnsplittableSentence(Exception):
    """No token matches any clause rule; the caller degrades gracefully."""


class ClauseType(Enum):
    CONJUNCT = "conj"
    CLAUSAL_COMPLEMENT = "ccomp"
    ADNOMINAL_CLAUSE = "acl"
    PREPOSITIONAL_COMPLEMENT = "pcomp"
    ADVERBIAL_CLAUSE = "advcl"
    OPEN_CLAUSAL_COMPLEMENT = "xcomp"
    SUBJECT_CLAUSE = "csubj"
    RELATIVE_CLAUSE = "relcl"


class RelativeSubtype(Enum):
    PRONOUN = "pronoun"
    ADVERB = "adverb"
    NONE = "none"


class TimeRelation(Enum):
    MAIN_BEFORE_SUB = "main_before_sub"
    MAIN_AFTER_SUB = "main_after_sub"
    SIMULTANEOUS = "simultaneous"


CLAUSE_RULES = {ct.value: ct for ct in ClauseType}

# Clause types whose removed span leaves a placeholder in the main
# proposition; the adverbial case applies only for purposive "to" clauses.
IDENTIFIER_BY_CLAUSE = {
    ClauseType.CLAUSAL_COMPLEMENT: "identifier_ccomp",
    ClauseType.PREPOSITIONAL_COMPLEMENT: "identifier_pcomp",
    ClauseType.OPEN_CLAUSAL_COMPLEMENT: "xcomp_identifier",
    ClauseType.SUBJECT_CLAUSE: "identifier_csubj",
    ClauseType.ADVERBIAL_CLAUSE: "identifier_advcl",
}

RELATIVE_PRONOUNS = frozenset({"that", "which", "who"})
RELATIVE_ADVERBS = frozenset({"when", "where"})

TEMPORAL_SUBORDINATORS = {
    "before": TimeRelation.MAIN_BEFORE_SUB,
    "after": TimeRelation.MAIN_AFTER_SUB,
    "when": TimeRelation.SIMULTANEOUS,
    "while": TimeRelation.SIMULTANEOUS,
    "whilst": TimeRelation.SIMULTANEOUS,
}

SUBJECT_LABELS = frozenset({"nsubj", "nsubjpass", "expl"})


@dataclass(frozen=True)
class Proposition:
    """A single-verb (or verbless) sub-sentence with a private token tree."""

    tokens: tuple[Token, ...]
    degraded: bool = False
    antecedent_uid: int | None = None

    @property
    def text(self) -> str:
        return " ".join(t.form for t in self.tokens if not t.is_punct)

    @property
    def anchor(self) -> int:
        """Position of the proposition in the original sentence."""
        originals = [t.uid for t in self.tokens if not t.inserted]
        return min(originals) if originals else min(t.uid for t in self.tokens)

    @property
    def verb_count(self) -> int:
        return count_verb_groups(self.tokens)

    def kind(self):
        return classify_verb_count(self.verb_count)

    @property
    def root(self) -> Token:
        return next(t for t in self.tokens if t.head_index == 0)

    def children_of(self, token: Token) -> list[Token]:
        return [t for t in self.tokens if t.head_index == token.index]


@dataclass(frozen=True)
class SplitStep:
    """Record of one clause extraction, consumed again when merging."""

    clause_type: ClauseType
    relative_subtype: RelativeSubtype | None
    identifier: str | None
    identifier_uid: int | None
    time_relation: TimeRelation | None
    host_uid: int
    antecedent_uid: int | None
    sub: Proposition


@dataclass(frozen=True)
class SplitResult:
    main: Proposition
    sub: Proposition
    clause_type: ClauseType
    relative_subtype: RelativeSubtype | None = None
    identifier: str | None = None
    identifier_uid: int | None = None
    time_relation: TimeRelation | None = None
    antecedent_uid: int | None = None
    host_uid: int = 0

    def step(self) -> SplitStep:
        return SplitStep(
            clause_type=self.clause_type,
            relative_subtype=self.relative_subtype,
            identifier=self.identifier,
            identifier_uid=self.identifier_uid,
            time_relation=self.time_relation,
            host_uid=self.host_uid,
            antecedent_uid=self.antecedent_uid,
            sub=self.sub,
        )


@dataclass
class SplitNode:
    """Internal node: pairs the subordinate leaf split off at this point
    with whatever remained of the sentence."""

    step: SplitStep
    rest: "SplitNode | Proposition"


@dataclass
class SplitTree:
    root: "SplitNode | Proposition"
    leaves: list[Proposition] = field(default_factory=list)
    steps: list[SplitStep] = field(default_factory=list)
    degraded: bool = False

    @property
    def leaf_order(self) -> list[Proposition]:
        return self.leaves


# ---------------------------------------------------------------------------
# Working-state helpers.  During recursion tokens keep their original indices
# (gaps are fine, heads refer to indices); list position is document order.


def _by_index(tokens: list[Token]) -> dict[int, Token]:
    return {t.index: t for t in tokens}


def _children(tokens: list[Token]) -> dict[int, list[Token]]:
    kids: dict[int, list[Token]] = {}
    for t in tokens:
        kids.setdefault(t.head_index, []).append(t)
    return kids


def _subtree(tokens: list[Token], head: Token) -> list[Token]:
    kids = _children(tokens)
    keep: set[int] = set()
    stack = [head]
    while stack:
        t = stack.pop()
        keep.add(t.index)
        stack.extend(kids.get(t.index, ()))
    return [t for t in tokens if t.index in keep]


def _candidates(tokens: list[Token], innermost: bool) -> list[tuple[Token, ClauseType]]:
    out = []
    for t in tokens:
        if t.upos in VERB_TAGS and t.dep_label in CLAUSE_RULES:
            if innermost and count_verb_groups(_subtree(tokens, t)) != 1:
                continue
            out.append((t, CLAUSE_RULES[t.dep_label]))
    return out


def find_subordinate_verb(
    sentence: AnnotatedSentence | list[Token], innermost: bool = True
) -> tuple[Token, ClauseType]:
    """Leftmost VERB/AUX token whose dependency label matches a clause rule.

    With ``innermost`` the match must own a single-verb subtree, so the
    extracted clause is always a proposition.
    """
    tokens = list(sentence.tokens) if isinstance(sentence, AnnotatedSentence) else sentence
    found = _candidates(tokens, innermost)
    if not found:
        raise UnsplittableSentence("no token matches a clause splitting rule")
    return found[0]


def _finalize(
    tokens: list[Token], root_index: int, degraded=False, antecedent_uid=None
) -> Proposition:
    """Reindex a token list 1..n and close it over its own tree."""
    index_map = {t.index: pos for pos, t in enumerate(tokens, start=1)}
    out = []
    for pos, t in enumerate(tokens, start=1):
        if t.index == root_index:
            head = 0
        elif t.head_index in index_map:
            head = index_map[t.head_index]
        else:
            head = index_map[root_index]  # orphan: reattach to the root
        out.append(t.with_(index=pos, head_index=head))
    return Proposition(tokens=tuple(out), degraded=degraded, antecedent_uid=antecedent_uid)


def extract_subtree(sentence: AnnotatedSentence, verb: Token) -> Proposition:
    """The verb's dependency subtree, document order, as a raw proposition."""
    sub = _subtree(list(sentence.tokens), verb)
    return _finalize(sub, verb.index)


class _Splitter:
    def __init__(self, sentence: AnnotatedSentence):
        self.tokens: list[Token] = list(sentence.tokens)
        self.next_uid = max((t.uid for t in self.tokens), default=0) + 1
        self.next_index = max((t.index for t in self.tokens), default=0) + 1

    def fresh_uid(self) -> int:
        self.next_uid += 1
        return self.next_uid - 1

    def fresh_index(self) -> int:
        self.next_index += 1
        return self.next_index - 1

    def copy_of(self, src: Token, *, dep: str, head: int) -> Token:
        return Token(
            index=self.fresh_index(),
            form=src.form,
            lemma=src.lemma,
            upos=src.upos,
            dep_label=dep,
            head_index=head,
            uid=src.uid,
            inserted=True,
        )

    def make_token(self, form, lemma, upos, dep, head) -> Token:
        return Token(
            index=self.fresh_index(),
            form=form,
            lemma=lemma,
            upos=upos,
            dep_label=dep,
            head_index=head,
            uid=self.fresh_uid(),
            inserted=True,
        )

    # -- subject recovery -------------------------------------------------

    def _subject_of(self, verb: Token) -> Token | None:
        """Nearest subject up the head chain from the clause verb.

        A participle hanging off a noun takes that noun itself; otherwise
        the first ancestor verb with a subject child supplies it.
        """
        index = _by_index(self.tokens)
        kids = _children(self.tokens)
        head = index.get(verb.head_index)
        while head is not None:
            if head.upos in NOUN_TAGS:
                return head
            if head.upos in VERB_TAGS:
                for child in kids.get(head.index, ()):
                    if child.dep_label in SUBJECT_LABELS:
                        return child
            head = index.get(head.head_index)
        return None

    def _splice_tokens(self, verb: Token, clause_type: ClauseType) -> list[Token]:
        subject = self._subject_of(verb)
        if subject is None:
            return []
        if clause_type is not ClauseType.CONJUNCT:
            return [self.copy_of(subject, dep="nsubj", head=verb.index)]
        # Conjoined clauses inherit the full subject phrase, articles dropped
        # ("three young men jump").
        phrase = [
            t
            for t in _subtree(self.tokens, subject)
            if t.dep_label != "det" and not t.is_punct
        ]
        remap: dict[int, int] = {}
        copies: list[tuple[Token, Token]] = []
        for t in phrase:
            dep = "nsubj" if t.index == subject.index else t.dep_label
            copy = self.copy_of(t, dep=dep, head=t.head_index)
            remap[t.index] = copy.index
            copies.append((t, copy))
        out = []
        for orig, copy in copies:
            if orig.index == subject.index:
                head = verb.index
            else:
                head = remap.get(orig.head_index, remap[subject.index])
            out.append(copy.with_(head_index=head))
        return out

    # -- one extraction ----------------------------------------------------

    def split_once(self) -> SplitStep:
        verb, clause_type = find_subordinate_verb(self.tokens, innermost=True)
        index = _by_index(self.tokens)
        kids = _children(self.tokens)
        subtree = _subtree(self.tokens, verb)
        sub_set = {t.index for t in subtree}
        host = index.get(verb.head_index)
        host_uid = host.uid if host is not None else 0

        relative_subtype: RelativeSubtype | None = None
        antecedent_uid: int | None = None
        time_relation: TimeRelation | None = None
        identifier: str | None = None

        excluded: set[int] = set()
        kept_to: Token | None = None
        replace_in_place: Token | None = None
        insert_after_verb: Token | None = None
        antecedent_copy: Token | None = None

        verb_kids = kids.get(verb.index, [])

        # Purposive/infinitival "to" stays behind in the main proposition.
        if clause_type in (ClauseType.ADVERBIAL_CLAUSE, ClauseType.OPEN_CLAUSAL_COMPLEMENT):
            for child in verb_kids:
                if (
                    child.lemma.lower() == "to"
                    and child.dep_label in ("aux", "mark", "part")
                    and child.index < verb.index
                ):
                    kept_to = child
                    break

        if clause_type is ClauseType.ADVERBIAL_CLAUSE:
            for child in verb_kids:
                if child.index >= verb.index or child.index not in sub_set:
                    continue
                lemma = child.lemma.lower()
                is_mark = child.dep_label == "mark"
                is_wh = child.dep_label == "advmod" and (
                    child.upos == "SCONJ" or lemma in ("when", "while", "whilst")
                )
                if (is_mark or is_wh) and child.lemma.lower() != "to":
                    excluded.add(child.index)
                    if lemma in TEMPORAL_SUBORDINATORS and time_relation is None:
                        time_relation = TEMPORAL_SUBORDINATORS[lemma]
            if kept_to is not None:
                identifier = IDENTIFIER_BY_CLAUSE[clause_type]
        elif clause_type in IDENTIFIER_BY_CLAUSE:
            identifier = IDENTIFIER_BY_CLAUSE[clause_type]

        if clause_type is ClauseType.CONJUNCT:
            time_relation = TimeRelation.SIMULTANEOUS

        if clause_type is ClauseType.RELATIVE_CLAUSE:
            rel_pronoun = next(
                (
                    t
                    for t in subtree
                    if t.lemma.lower() in RELATIVE_PRONOUNS
                    and t.dep_label in ("nsubj", "dobj")
                    and t.head_index == verb.index
                ),
                None,
            )
            rel_adverb = next(
                (
                    t
                    for t in subtree
                    if t.lemma.lower() in RELATIVE_ADVERBS
                    and t.dep_label == "advmod"
                    and t.head_index == verb.index
                ),
                None,
            )
            antecedent = host if host is not None and host.upos not in VERB_TAGS else None
            if antecedent is not None:
                antecedent_uid = antecedent.uid
            if rel_pronoun is not None and antecedent is not None:
                relative_subtype = RelativeSubtype.PRONOUN
                antecedent_copy = self.copy_of(
                    antecedent, dep=rel_pronoun.dep_label, head=verb.index
                )
                if rel_pronoun.dep_label == "nsubj":
                    replace_in_place = rel_pronoun
                else:
                    excluded.add(rel_pronoun.index)
                    insert_after_verb = antecedent_copy
            elif rel_adverb is not None:
                relative_subtype = RelativeSubtype.ADVERB
                time_relation = TimeRelation.SIMULTANEOUS
            else:
                relative_subtype = RelativeSubtype.NONE
                time_relation = TimeRelation.SIMULTANEOUS

        # Assemble the subordinate proposition.
        sub_tokens: list[Token] = []
        for t in subtree:
            if t.index in excluded:
                continue
            if kept_to is not None and t.index == kept_to.index:
                continue
            if replace_in_place is not None and t.index == replace_in_place.index:
                sub_tokens.append(antecedent_copy)
                continue
            sub_tokens.append(t)
            if insert_after_verb is not None and t.index == verb.index:
                sub_tokens.append(insert_after_verb)

        has_subject = any(
            t.dep_label in SUBJECT_LABELS and t.head_index == verb.index
            for t in sub_tokens
        )
        if not has_subject and clause_type is not ClauseType.SUBJECT_CLAUSE:
            spliced = self._splice_tokens(verb, clause_type)
            if spliced:
                if (
                    verb.form.lower().endswith("ing")
                    and verb.form.lower() != verb.lemma.lower()
                ):
                    spliced.append(self.make_token("be", "be", "AUX", "aux", verb.index))
                sub_tokens = spliced + sub_tokens

        sub = _finalize(sub_tokens, verb.index, antecedent_uid=antecedent_uid)

        # Assemble the residual sentence.
        removed = set(sub_set)
        if kept_to is not None:
            removed.discard(kept_to.index)
        if clause_type is ClauseType.CONJUNCT and host is not None:
            # Drop the coordinator and stray commas sitting between the host
            # verb and the conjunct that was taken out.
            for child in kids.get(host.index, ()):
                if (
                    child.dep_label in ("cc", "punct")
                    and host.index < child.index < verb.index
                ):
                    removed.add(child.index)

        first_removed_pos = next(i for i, t in enumerate(self.tokens) if t.index in removed)
        identifier_uid: int | None = None
        residual: list[Token] = []
        for i, t in enumerate(self.tokens):
            if i == first_removed_pos and identifier is not None:
                if kept_to is not None:
                    head, dep = kept_to.index, "pobj"
                elif clause_type is ClauseType.SUBJECT_CLAUSE:
                    head, dep = verb.head_index, "nsubj"
                elif clause_type is ClauseType.PREPOSITIONAL_COMPLEMENT:
                    head, dep = verb.head_index, "pobj"
                else:
                    head, dep = verb.head_index, "dobj"
                ident_tok = self.make_token(identifier, identifier, "X", dep, head)
                identifier_uid = ident_tok.uid
                residual.append(ident_tok)
            if t.index in removed:
                continue
            if kept_to is not None and t.index == kept_to.index:
                t = t.with_(head_index=verb.head_index, dep_label="prep")
            residual.append(t)
        self.tokens = residual

        return SplitStep(
            clause_type=clause_type,
            relative_subtype=relative_subtype,
            identifier=identifier,
            identifier_uid=identifier_uid,
            time_relation=time_relation,
            host_uid=host_uid,
            antecedent_uid=antecedent_uid,
            sub=sub,
        )

    def finalize_residual(self, degraded=False) -> Proposition:
        root = next(t for t in self.tokens if t.head_index == 0)
        return _finalize(self.tokens, root.index, degraded=degraded)


def split_prop2(sentence: AnnotatedSentence) -> SplitResult:
    """Split a two-verb sentence into (main, subordinate) propositions."""
    splitter = _Splitter(sentence)
    step = splitter.split_once()
    main = splitter.finalize_residual()
    return SplitResult(
        main=main,
        sub=step.sub,
        clause_type=step.clause_type,
        relative_subtype=step.relative_subtype,
        identifier=step.identifier,
        identifier_uid=step.identifier_uid,
        time_relation=step.time_relation,
        antecedent_uid=step.antecedent_uid,
        host_uid=step.host_uid,
    )


def split_recursive(sentence: AnnotatedSentence) -> SplitTree:
    """Decompose a sentence of any verb count into ordered propositions."""
    splitter = _Splitter(sentence)
    steps: list[SplitStep] = []
    degraded = False
    while count_verb_groups(splitter.tokens) >= 2:
        try:
            steps.append(splitter.split_once())
        except UnsplittableSentence:
            degraded = True
            break
    final_leaf = splitter.finalize_residual(degraded=degraded)

    tree_root: SplitNode | Proposition = final_leaf
    for step in reversed(steps):
        tree_root = SplitNode(step=step, rest=tree_root)

    leaves = sorted([s.sub for s in steps] + [final_leaf], key=lambda p: p.anchor)
    return SplitTree(root=tree_root, leaves=leaves, steps=steps, degraded=degraded)

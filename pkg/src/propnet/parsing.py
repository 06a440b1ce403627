"""Extraction of the semantic dimensions of a single proposition.

One action per proposition; nominal participants hang off it as subject,
object, or one of five preposition-routed roles, with attributes, parts and
locations attached to the nouns themselves.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .splitting import Proposition
from .tokens import AUXILIARY_LABELS, NOUN_TAGS, Token, VERB_TAGS


class DimensionKind(Enum):
    ACTION = "action"
    SUBJECT = "subject"
    OBJECT = "object"
    WHERE = "where"
    AUX_OBJ = "aux_obj"
    GOAL = "goal"
    REASON = "reason"
    SOURCE = "source"
    ATTRIBUTE = "attribute"
    PART_OF = "part_of"


# Role slots that hold nouns, in canonical order.
SLOT_NAMES = ("subject", "object", "where", "aux_obj", "goal", "source", "reason")

WHERE_PREPOSITIONS = frozenset({
    "on", "in", "inside", "through", "over", "around", "down", "at", "near",
    "along", "outside", "past", "across", "during", "after", "before",
    "while", "whilst", "off", "amid", "behind",
})
AUX_OBJ_PREPOSITIONS = frozenset({"with", "by", "about", "like", "as"})
GOAL_PREPOSITIONS = frozenset({"into", "to", "onto", "towards", "against"})
REASON_PREPOSITIONS = frozenset({"for", "due"})
SOURCE_PREPOSITIONS = frozenset({"from"})

_PREPOSITION_SLOTS = [
    (WHERE_PREPOSITIONS, "where"),
    (AUX_OBJ_PREPOSITIONS, "aux_obj"),
    (GOAL_PREPOSITIONS, "goal"),
    (REASON_PREPOSITIONS, "reason"),
    (SOURCE_PREPOSITIONS, "source"),
]

ATTRIBUTE_LABELS = frozenset({"amod", "nmod", "compound"})


def classify_preposition(prep: str) -> DimensionKind | None:
    """Route a preposition lemma to its role slot; unknown ones are dropped."""
    for members, slot in _PREPOSITION_SLOTS:
        if prep in members:
            return DimensionKind(slot)
    return None


@dataclass
class NounSlot:
    """A noun filling a role, with its own describing tokens."""

    head: Token
    attributes: list[Token] = field(default_factory=list)
    parts_of: list[Token] = field(default_factory=list)
    where: list[Token] = field(default_factory=list)


@dataclass
class DimensionFrame:
    action: Token | None
    slots: dict[str, list[NounSlot]]

    def slot(self, name: str) -> list[NounSlot]:
        return self.slots[name]


def _noun_ok(t: Token) -> bool:
    return t.upos in NOUN_TAGS or t.is_identifier


def _expand_conj(prop: Proposition, token: Token, accept) -> list[Token]:
    """A token plus its coordinated siblings ("orange and apple")."""
    out = [token]
    frontier = [token]
    while frontier:
        t = frontier.pop()
        for child in prop.children_of(t):
            if child.dep_label == "conj" and accept(child):
                out.append(child)
                frontier.append(child)
    return sorted(out, key=lambda t: t.index)


def _find_action(prop: Proposition) -> Token | None:
    root = prop.root
    if root.upos in VERB_TAGS:
        return root
    for t in prop.tokens:
        if t.upos in VERB_TAGS and t.dep_label not in AUXILIARY_LABELS:
            return t
    return None


def _fill_noun_slot(prop: Proposition, head: Token) -> NounSlot:
    slot = NounSlot(head=head)
    for child in prop.children_of(head):
        if child.dep_label in ATTRIBUTE_LABELS:
            slot.attributes.extend(_expand_conj(prop, child, lambda t: True))
        elif child.dep_label == "poss":
            slot.parts_of.extend(_expand_conj(prop, child, _noun_ok))
        elif child.dep_label == "prep":
            lemma = child.lemma.lower()
            objects = [
                t
                for pobj in prop.children_of(child)
                if pobj.dep_label == "pobj" and _noun_ok(pobj)
                for t in _expand_conj(prop, pobj, _noun_ok)
            ]
            if lemma == "of":
                slot.parts_of.extend(objects)
            elif classify_preposition(lemma) is DimensionKind.WHERE:
                slot.where.extend(objects)
    return slot


def parse_dimensions(prop: Proposition) -> DimensionFrame:
    """Fill the role slots of a proposition from its dependency tree."""
    slots: dict[str, list[NounSlot]] = {name: [] for name in SLOT_NAMES}
    action = _find_action(prop)

    def add(name: str, nouns: list[Token]) -> None:
        slots[name].extend(_fill_noun_slot(prop, n) for n in nouns)

    if action is not None:
        for child in prop.children_of(action):
            if child.dep_label == "nsubj" and _noun_ok(child):
                add("subject", _expand_conj(prop, child, _noun_ok))
            elif child.dep_label in ("dobj", "nsubjpass") and _noun_ok(child):
                add("object", _expand_conj(prop, child, _noun_ok))
            elif child.dep_label in ("prep", "agent"):
                kind = classify_preposition(child.lemma.lower())
                if kind is None:
                    continue
                nouns = [
                    t
                    for pobj in prop.children_of(child)
                    if pobj.dep_label in ("pobj", "pcomp") and _noun_ok(pobj)
                    for t in _expand_conj(prop, pobj, _noun_ok)
                ]
                add(kind.value, nouns)
    else:
        # Verbless proposition: anchor on the head noun as subject.
        root = prop.root
        if _noun_ok(root):
            add("subject", _expand_conj(prop, root, _noun_ok))

    return DimensionFrame(action=action, slots=slots)


def frame_to_dict(frame: DimensionFrame) -> dict:
    """JSON-friendly view of a frame."""

    def noun(ns: NounSlot) -> dict:
        return {
            "head": ns.head.lemma,
            "attributes": [t.lemma for t in ns.attributes],
            "parts_of": [t.lemma for t in ns.parts_of],
            "where": [t.lemma for t in ns.where],
        }

    return {
        "action": frame.action.lemma if frame.action is not None else None,
        **{name: [noun(ns) for ns in frame.slots[name]] for name in SLOT_NAMES},
    }

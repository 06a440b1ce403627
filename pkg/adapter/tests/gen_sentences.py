"""Deterministic raw-sentence generator for adapter round-trip tests."""

import hashlib

PEOPLE = ["man", "woman", "boy", "girl", "child", "teacher", "dancer", "chef"]
ANIMALS = ["dog", "cat", "horse", "monkey", "bird", "tiger"]
OBJECTS = ["guitar", "ball", "knife", "kite", "stick", "towel", "book", "bike"]
FOODS = ["onion", "potato", "carrot", "apple", "banana", "bread"]
PLACES = ["park", "garden", "street", "beach", "field", "kitchen", "yard", "pool"]
ADJS = ["young", "old", "tall", "small", "big", "black", "white", "happy"]
ING = ["playing", "holding", "washing", "carrying", "riding", "cutting",
       "throwing", "catching", "eating", "painting", "pushing", "chasing"]
SIMPLE = ["runs", "jumps", "dances", "sings", "walks", "sleeps", "smiles", "waits"]
PREPS = ["in", "on", "near", "at"]


def _u(*parts) -> float:
    digest = hashlib.md5("|".join(str(p) for p in parts).encode()).hexdigest()
    return int(digest[:12], 16) / float(16**12)


def _pick(seq, *key):
    return seq[int(_u(*key) * len(seq)) % len(seq)]


def sentence(i: int) -> str:
    kind = _u(i, "kind")
    subj = _pick(PEOPLE + ANIMALS, i, "s")
    place = _pick(PLACES, i, "p")
    adj = _pick(ADJS, i, "a")
    if kind < 0.10:  # verbless
        return f"A {subj} {_pick(PREPS, i, 'pr')} the {place}."
    if kind < 0.45:  # progressive with object and location
        obj = _pick(OBJECTS + FOODS, i, "o")
        return f"The {adj} {subj} is {_pick(ING, i, 'v')} a {obj} {_pick(PREPS, i, 'pr')} the {place}."
    if kind < 0.65:  # simple intransitive
        return f"The {subj} {_pick(SIMPLE, i, 'v')} {_pick(PREPS, i, 'pr')} the {place}."
    if kind < 0.80:  # conjoined clauses
        obj = _pick(OBJECTS, i, "o")
        return f"A {subj} is {_pick(ING, i, 'v1')} a {obj} and {_pick(ING, i, 'v2')} a {_pick(OBJECTS, i, 'o2')}."
    if kind < 0.90:  # subordinate clause
        subj2 = _pick(PEOPLE, i, "s2")
        return (
            f"The {subj} {_pick(SIMPLE, i, 'v1')} before the {subj2} "
            f"{_pick(SIMPLE, i, 'v2')}."
        )
    obj = _pick(FOODS, i, "o")  # three coordinated verbs
    return (
        f"The {adj} {subj} {_pick(SIMPLE, i, 'v1')}, {_pick(SIMPLE, i, 'v2')}, "
        f"and {_pick(SIMPLE, i, 'v3')} {_pick(PREPS, i, 'pr')} the {place}."
    )


def corpus(n: int) -> list[str]:
    return [sentence(i) for i in range(n)]

"""Heuristic dependency builder emitting spaCy-style labels.

A deterministic fallback for environments without a statistical parser:
verb groups anchor the clause structure, nominals attach to the nearest
plausible governor, and a repair pass guarantees a single-root tree.  Good
enough for benchmark-style declarative sentences; long-range attachment
subtleties are out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tagger import Tagged

NOMINAL = ("NOUN", "PROPN", "PRON", "NUM")


@dataclass
class Parsed:
    form: str
    lemma: str
    upos: str
    head: int  # 1-based, 0 = root
    dep: str


def _verb_groups(tags: list[Tagged]) -> list[dict]:
    """Maximal aux*+verb runs; a standalone auxiliary is a copula head."""
    groups = []
    i = 0
    n = len(tags)
    while i < n:
        if tags[i].upos in ("AUX", "VERB"):
            start = i
            auxes = []
            while i < n and tags[i].upos == "AUX":
                auxes.append(i)
                i += 1
                if i < n and tags[i].upos == "PART" and tags[i].lemma in ("not", "to"):
                    i += 1
            if i < n and tags[i].upos == "VERB":
                head = i
                i += 1
            elif auxes:
                head = auxes.pop()
            else:
                head = start
                i = max(i, start + 1)
            groups.append({"head": head, "aux": auxes, "start": start})
        else:
            i += 1
    return groups


def parse(tags: list[Tagged]) -> list[Parsed]:
    n = len(tags)
    head = [None] * n
    dep = [None] * n
    groups = _verb_groups(tags)

    def set_arc(i, h, label):
        if head[i] is None:
            head[i] = h
            dep[i] = label

    # bare participles right after a noun modify that noun, not the clause
    for idx, g in enumerate(groups):
        h = g["head"]
        if g["aux"] or not tags[h].form.lower().endswith("ing"):
            continue
        j = g["start"] - 1
        while j >= 0 and tags[j].upos == "PUNCT":
            j -= 1
        if j >= 0 and tags[j].upos in ("NOUN", "PROPN") and idx + 1 < len(groups):
            g["acl_of"] = j

    # -- pick the root group -------------------------------------------------
    root_group = None
    main_groups = [g for g in groups if "acl_of" not in g]
    if groups:
        if tags and tags[0].upos == "SCONJ":
            # sentence-initial subordinate clause runs to the first comma
            comma = next((i for i, t in enumerate(tags) if t.form == ","), None)
            if comma is not None:
                after = [g for g in main_groups if g["head"] > comma]
                if after:
                    root_group = after[0]
        if root_group is None:
            root_group = main_groups[0] if main_groups else groups[0]
    root = root_group["head"] if groups else None

    # -- verb-group internals and clause links --------------------------------
    prev_group = None
    for g in groups:
        h = g["head"]
        for a in g["aux"]:
            set_arc(a, h, "aux")
        if g is root_group:
            set_arc(h, -1, "root")
        elif "acl_of" in g:
            set_arc(h, g["acl_of"], "acl")
        else:
            link = _clause_link(tags, groups, g, prev_group, root_group)
            set_arc(h, *link)
        prev_group = g

    group_heads = [g["head"] for g in groups]

    # -- nominal pre-modifiers -------------------------------------------------
    np_head_of = [None] * n
    possessive = {"my", "your", "his", "her", "its", "our", "their"}
    i = 0
    while i < n:
        if (
            tags[i].upos in NOMINAL
            and tags[i].upos != "NUM"
            and not (tags[i].upos == "PRON" and tags[i].lemma in possessive)
        ):
            j = i
            while (
                j + 1 < n
                and tags[j + 1].upos in ("NOUN", "PROPN")
                and j + 1 not in group_heads
            ):
                j += 1
            for k in range(i, j):
                set_arc(k, j, "compound")
                np_head_of[k] = j
            np_head_of[j] = j
            i = j + 1
        else:
            i += 1

    def next_np_head(i):
        for j in range(i + 1, n):
            if np_head_of[j] == j:
                return j
            if tags[j].upos in ("VERB", "AUX", "ADP", "PUNCT", "CCONJ", "SCONJ"):
                break
        return None

    def prev_np_head(i):
        for j in range(i - 1, -1, -1):
            if np_head_of[j] == j:
                return j
        return None

    def prev_group_head(i):
        best = None
        for g in groups:
            if g["head"] < i:
                best = g["head"]
        return best

    def next_group_head(i, skip_acl=False):
        for g in groups:
            if g["head"] > i and not (skip_acl and "acl_of" in g):
                return g["head"]
        return None

    for i, t in enumerate(tags):
        if head[i] is not None:
            continue
        if t.upos == "DET":
            target = next_np_head(i)
            set_arc(i, target if target is not None else root, "det")
        elif t.upos == "NUM":
            target = next_np_head(i)
            if target is not None:
                set_arc(i, target, "nummod")
                np_head_of[i] = target
        elif t.upos == "ADJ":
            target = next_np_head(i)
            if target is not None:
                set_arc(i, target, "amod")
            else:
                g = prev_group_head(i)
                if g is not None:
                    set_arc(i, g, "acomp")
        elif t.upos == "PRON" and t.lemma in possessive:
            target = next_np_head(i)
            set_arc(i, target if target is not None else root, "poss")

    # -- prepositions -----------------------------------------------------------
    for i, t in enumerate(tags):
        if t.upos != "ADP" or head[i] is not None:
            continue
        nxt = next((j for j in range(i + 1, n) if tags[j].upos != "PUNCT"), None)
        if nxt is not None and nxt in group_heads:
            set_arc(i, prev_group_head(i) if prev_group_head(i) is not None else root, "prep")
            set_arc(nxt, i, "pcomp")
            continue
        pobj = next_np_head(i)
        governor = None
        if t.lemma == "of":
            k = i - 1
            while k >= 0 and tags[k].upos == "PUNCT":
                k -= 1
            if k >= 0 and np_head_of[k] == k:
                governor = k
        if governor is None:
            governor = prev_group_head(i)
        if governor is None:
            governor = prev_np_head(i)
        if governor is None:
            governor = next_group_head(i)
        set_arc(i, governor if governor is not None else root, "prep")
        if pobj is not None:
            set_arc(pobj, i, "pobj")

    # -- subjects and objects -----------------------------------------------------
    for j in range(n):
        if np_head_of[j] != j or head[j] is not None:
            continue
        nxt_group = next_group_head(j, skip_acl=True)
        prev_grp = prev_group_head(j)
        between_blocked = False
        if nxt_group is not None:
            between = tags[j + 1 : nxt_group]
            between_blocked = any(
                t.upos in ("PUNCT", "CCONJ", "SCONJ") for t in between
            )
        if nxt_group is not None and not between_blocked:
            set_arc(j, nxt_group, "nsubj")
        elif prev_grp is not None:
            set_arc(j, prev_grp, "dobj")

    # noun coordination: a bare nominal after cc joins the previous one
    for i, t in enumerate(tags):
        if t.upos == "CCONJ":
            nxt = next_np_head(i)
            prev_n = prev_np_head(i)
            nxt_is_verb = any(
                g["head"] > i and all(tags[k].upos in ("PUNCT", "CCONJ") for k in range(i + 1, g["start"]))
                for g in groups
            )
            if nxt_is_verb or prev_n is None:
                target = prev_group_head(i)
                set_arc(i, target if target is not None else root, "cc")
            else:
                set_arc(i, prev_n, "cc")
                if nxt is not None and head[nxt] is None:
                    set_arc(nxt, prev_n, "conj")

    # -- everything else ----------------------------------------------------------
    fallback = root
    if fallback is None:
        fallback = next((j for j in range(n) if np_head_of[j] == j), 0)
        set_arc(fallback, -1, "root")
    for i, t in enumerate(tags):
        if head[i] is not None:
            continue
        if t.upos == "PUNCT":
            set_arc(i, fallback, "punct")
        elif t.upos == "SCONJ":
            target = next_group_head(i)
            set_arc(i, target if target is not None else fallback, "mark")
        elif t.upos == "PART":
            target = next_group_head(i) if t.lemma == "to" else prev_group_head(i)
            set_arc(i, target if target is not None else fallback, "aux" if t.lemma == "to" else "neg")
        elif t.upos == "ADV":
            target = prev_group_head(i) or next_group_head(i)
            set_arc(i, target if target is not None else fallback, "advmod")
        else:
            set_arc(i, fallback, "dep")

    # -- repair: exactly one root, no cycles ---------------------------------------
    root_index = next((i for i in range(n) if head[i] == -1), None)
    if root_index is None:
        root_index = fallback
        head[root_index] = -1
        dep[root_index] = "root"
    for i in range(n):
        if i != root_index and head[i] == -1:
            head[i] = root_index
            dep[i] = "dep"
    for i in range(n):
        seen = set()
        j = i
        while j != root_index and head[j] != -1:
            if j in seen:
                head[j] = root_index
                dep[j] = "dep"
                break
            seen.add(j)
            j = head[j]

    return [
        Parsed(
            form=t.form,
            lemma=t.lemma,
            upos=t.upos,
            head=0 if head[i] == -1 else head[i] + 1,
            dep=dep[i] or "dep",
        )
        for i, t in enumerate(tags)
    ]


def _clause_link(tags, groups, group, prev_group, root_group):
    """Attachment of a non-root verb group head."""
    h = group["head"]
    start = group["start"]
    root = root_group["head"]
    # look left from the group start, skipping adverbs
    j = start - 1
    while j >= 0 and tags[j].upos in ("ADV",):
        j -= 1
    if j >= 0:
        t = tags[j]
        if t.upos == "SCONJ":
            return (root if h > root else root, "advcl")
        if t.upos == "PART" and t.lemma == "to":
            target = prev_group["head"] if prev_group else root
            return (target, "xcomp")
        if t.upos == "ADP":
            return (j, "pcomp")
        if t.upos == "PRON" and t.lemma in ("who", "that", "which"):
            k = j - 1
            while k >= 0 and tags[k].upos == "PUNCT":
                k -= 1
            if k >= 0 and tags[k].upos in ("NOUN", "PROPN"):
                return (k, "relcl")
    # a coordinator between the previous group and this one
    lo = prev_group["head"] if prev_group is not None else -1
    between = tags[lo + 1 : start]
    if any(t.upos == "CCONJ" for t in between):
        target = prev_group["head"] if prev_group else root
        return (target, "conj")
    if any(t.upos == "SCONJ" for t in between):
        return (root, "advcl")
    target = prev_group["head"] if prev_group else root
    if any(t.upos in NOMINAL for t in between):
        return (target, "ccomp")
    return (target, "conj")

"""Closed-class word lists and inflection tables for the built-in tagger."""

from __future__ import annotations

DETERMINERS = {
    "a", "an", "the", "this", "these", "those", "some", "any", "no",
    "every", "each", "another", "both", "all",
}

POSSESSIVES = {"my", "your", "his", "her", "its", "our", "their"}

PRONOUNS = {
    "i", "you", "he", "she", "it", "we", "they",
    "me", "him", "them", "us", "who", "that", "which", "what",
    "someone", "something", "anyone", "anything", "everyone", "everything",
}

AUXILIARIES = {
    "am", "is", "are", "was", "were", "be", "been", "being",
    "do", "does", "did", "have", "has", "had",
    "will", "would", "can", "could", "shall", "should", "may", "might", "must",
    "'s", "'re", "'m", "'ve", "'ll", "'d",
}

AUX_LEMMA = {
    "am": "be", "is": "be", "are": "be", "was": "be", "were": "be",
    "been": "be", "being": "be", "be": "be",
    "does": "do", "did": "do", "do": "do",
    "has": "have", "had": "have", "have": "have",
    "'s": "be", "'re": "be", "'m": "be", "'ve": "have", "'ll": "will", "'d": "would",
}

PREPOSITIONS = {
    "on", "in", "inside", "through", "over", "around", "down", "at", "near",
    "along", "outside", "past", "across", "during", "off", "amid", "behind",
    "into", "to", "onto", "towards", "against", "for", "due", "from",
    "with", "by", "about", "like", "as", "of", "under", "between", "above",
    "up", "out",
}

COORDINATORS = {"and", "or", "but"}

SUBORDINATORS = {
    "although", "because", "if", "when", "while", "whilst", "before",
    "after", "since", "unless", "though", "where",
}

PARTICLES = {"to", "not", "n't"}

ADVERBS = {
    "very", "really", "quickly", "slowly", "carefully", "quietly", "loudly",
    "here", "there", "now", "then", "today", "yesterday", "tomorrow",
    "always", "never", "often", "sometimes", "again", "away", "back",
    "together", "alone", "outside", "inside", "up", "down",
}

NUMBER_WORDS = {
    "one", "two", "three", "four", "five", "six", "seven", "eight", "nine",
    "ten", "eleven", "twelve", "twenty", "thirty", "forty", "fifty",
    "hundred", "thousand", "million", "several", "few", "many", "couple",
}

ADJECTIVES = {
    "young", "old", "tall", "short", "small", "big", "large", "black",
    "white", "brown", "red", "blue", "green", "yellow", "pink", "purple",
    "grey", "gray", "happy", "sad", "little", "good", "bad", "easy", "hard",
    "simple", "clear", "useful", "new", "former", "senior", "local",
    "national", "strong", "deadly", "delicate", "polar", "excellent",
    "interesting", "nice", "warm", "cold", "hot", "dark", "bright", "clean",
    "dirty", "fast", "slow", "high", "low", "long", "wide", "narrow",
    "heavy", "empty", "full", "early", "late", "free", "busy", "quiet",
    "loud", "rich", "poor", "safe", "dangerous", "serious", "funny",
    "angry", "tired", "hungry", "beautiful", "smart", "friendly", "wild",
    "calm", "windy", "sunny", "rainy", "wooden", "golden", "round", "flat",
    "sharp", "soft", "fresh", "dry", "wet", "open",
}

VERB_LEMMAS = {
    "be", "have", "do", "go", "say", "get", "make", "know", "think", "take",
    "see", "come", "want", "look", "use", "find", "give", "tell", "work",
    "call", "try", "ask", "need", "feel", "become", "leave", "put", "mean",
    "keep", "let", "begin", "seem", "help", "talk", "turn", "start", "show",
    "hear", "play", "run", "move", "like", "live", "believe", "hold",
    "bring", "happen", "write", "provide", "sit", "stand", "lose", "pay",
    "meet", "include", "continue", "set", "learn", "change", "lead",
    "understand", "watch", "follow", "stop", "create", "speak", "read",
    "allow", "add", "spend", "grow", "walk", "win", "offer", "remember",
    "love", "consider", "appear", "buy", "wait", "serve", "die", "send",
    "expect", "build", "stay", "fall", "cut", "reach", "kill", "remain",
    "suggest", "raise", "pass", "sell", "require", "report", "decide",
    "pull", "push", "carry", "throw", "catch", "climb", "wash", "jump",
    "dance", "sing", "eat", "cook", "slice", "peel", "chase", "ride",
    "slide", "pour", "praise", "pack", "borrow", "rain", "swim", "kick",
    "wear", "fight", "close", "rise", "sign", "ban", "visit", "arrest",
    "release", "approve", "reject", "announce", "strike", "blame", "warn",
    "seize", "reply", "describe", "share", "explain", "agree", "drink",
    "smile", "laugh", "cry", "sleep", "drive", "fly", "swing", "point",
    "cover", "draw", "pick", "wave", "lift", "drop", "fix", "paint",
    "feed", "hug", "kiss", "mix", "chop", "stir", "fry", "boil", "bake",
    "taste", "smell", "open", "travel", "study", "teach", "answer",
}

IRREGULAR_VERB_FORMS = {
    "ran": "run", "sat": "sit", "held": "hold", "caught": "catch",
    "ate": "eat", "eaten": "eat", "went": "go", "gone": "go", "goes": "go",
    "said": "say", "made": "make", "took": "take", "taken": "take",
    "got": "get", "gotten": "get", "gave": "give", "given": "give",
    "found": "find", "thought": "think", "knew": "know", "known": "know",
    "saw": "see", "seen": "see", "came": "come", "wrote": "write",
    "written": "write", "met": "meet", "paid": "pay", "lost": "lose",
    "stood": "stand", "brought": "bring", "began": "begin", "begun": "begin",
    "left": "leave", "kept": "keep", "felt": "feel", "meant": "mean",
    "told": "tell", "became": "become", "heard": "hear", "led": "lead",
    "understood": "understand", "spoke": "speak", "spoken": "speak",
    "grew": "grow", "grown": "grow", "won": "win", "fell": "fall",
    "fallen": "fall", "sold": "sell", "bought": "buy", "sent": "send",
    "built": "build", "drew": "draw", "drawn": "draw", "drove": "drive",
    "driven": "drive", "flew": "fly", "flown": "fly", "slept": "sleep",
    "drank": "drink", "drunk": "drink", "sang": "sing", "sung": "sing",
    "swam": "swim", "swum": "swim", "wore": "wear", "worn": "wear",
    "fought": "fight", "rose": "rise", "risen": "rise", "struck": "strike",
    "threw": "throw", "thrown": "throw", "rode": "ride", "ridden": "ride",
    "slid": "slide", "taught": "teach", "spent": "spend", "read": "read",
}

# verbs whose final consonant doubles before -ing/-ed
DOUBLING = {
    "run", "sit", "swim", "cut", "put", "set", "get", "let", "win", "stop",
    "drop", "hit", "hug", "ban", "chop", "stir", "grab", "chat", "plan",
    "jam", "strip", "snap", "spin", "slam", "skip", "wrap", "tap", "trim",
}

IRREGULAR_PLURALS = {
    "men": "man", "women": "woman", "children": "child", "people": "person",
    "feet": "foot", "teeth": "tooth", "mice": "mouse", "geese": "goose",
}


def verb_forms(lemma: str) -> dict[str, str]:
    """form -> lemma map for one verb under regular inflection."""
    forms = {lemma: lemma}
    if lemma.endswith(("s", "x", "z", "ch", "sh", "o")):
        forms[lemma + "es"] = lemma
    elif lemma.endswith("y") and len(lemma) > 1 and lemma[-2] not in "aeiou":
        forms[lemma[:-1] + "ies"] = lemma
    else:
        forms[lemma + "s"] = lemma
    if lemma.endswith("ie"):
        forms[lemma[:-2] + "ying"] = lemma
    elif lemma.endswith("e") and not lemma.endswith("ee"):
        forms[lemma[:-1] + "ing"] = lemma
    elif lemma in DOUBLING:
        forms[lemma + lemma[-1] + "ing"] = lemma
    else:
        forms[lemma + "ing"] = lemma
    if lemma.endswith("e"):
        forms[lemma + "d"] = lemma
    elif lemma.endswith("y") and len(lemma) > 1 and lemma[-2] not in "aeiou":
        forms[lemma[:-1] + "ied"] = lemma
    elif lemma in DOUBLING:
        forms[lemma + lemma[-1] + "ed"] = lemma
    else:
        forms[lemma + "ed"] = lemma
    return forms


def build_verb_table() -> dict[str, str]:
    table: dict[str, str] = {}
    for lemma in VERB_LEMMAS:
        table.update(verb_forms(lemma))
    table.update(IRREGULAR_VERB_FORMS)
    for form, lemma in AUX_LEMMA.items():
        table[form] = lemma
    return table


VERB_TABLE = build_verb_table()


def noun_lemma(form: str) -> str:
    word = form.lower()
    if word in IRREGULAR_PLURALS:
        return IRREGULAR_PLURALS[word]
    if word.endswith("ies") and len(word) > 4:
        return word[:-3] + "y"
    if word.endswith(("ches", "shes", "xes", "sses", "zes")):
        return word[:-2]
    if word.endswith("oes") and len(word) > 4:
        return word[:-2]
    if word.endswith("s") and not word.endswith(("ss", "us", "is")) and len(word) > 3:
        return word[:-1]
    return word

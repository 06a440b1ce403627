"""Difference vectors between two sentence representations.

Single-proposition pairs compare over 24 canonical dimensions; pairs with a
two-proposition side align propositions first and emit 48 codes; pairs with
a three-or-more side align by word overlap and emit 96 codes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import PropGraph, UNKNOWN_LEMMA, HypernymLexicon, merge_tree
from .oracle import Oracle
from .splitting import Proposition, SplitTree, split_recursive
from .tokens import AnnotatedSentence, PairKind, SentenceKind, classify_pair, classify_sentence

# Canonical dimension order; CART input positions are bound to it.
_BASES = ("subject", "object", "aux_obj", "where", "goal", "source", "reason")

COMPARISON_DIMENSIONS: list[tuple[str, tuple[str, ...]]] = [("#action", ("action",))]
for _base in _BASES:
    COMPARISON_DIMENSIONS.append((f"#action|#{_base}", (_base,)))
    COMPARISON_DIMENSIONS.append((f"#action|#{_base}|#attr", (_base, "attr")))
    COMPARISON_DIMENSIONS.append((f"#action|#{_base}|#part_of", (_base, "part_of")))
COMPARISON_DIMENSIONS.append(("#action|#subject|#where", ("subject", "where")))
COMPARISON_DIMENSIONS.append(("#action|#object|#where", ("object", "where")))

DIMENSION_NAMES = [name for name, _ in COMPARISON_DIMENSIONS]
DIMENSION_INDEX = {name: i for i, name in enumerate(DIMENSION_NAMES)}

CODE_IDENTICAL = 0
CODE_SIMILAR = 1
CODE_DIFFERENT = 2
CODE_LONG_EQUAL = 3
CODE_LENGTH_MISMATCH = 4

P1_LENGTH = 24
P2_LENGTH = 48
P3_LENGTH = 96


@dataclass(frozen=True)
class DifferenceVector:
    codes: tuple[int, ...]
    pair_kind: PairKind


@dataclass
class SentenceRep:
    """Everything the comparator needs about one sentence."""

    sentence: AnnotatedSentence
    kind: SentenceKind
    tree: SplitTree
    graph: PropGraph
    roots: list[int] = field(default_factory=list)

    @property
    def leaves(self) -> list[Proposition]:
        return self.tree.leaves

    @property
    def degraded(self) -> bool:
        return self.tree.degraded


def build_representation(sentence: AnnotatedSentence, lex: HypernymLexicon) -> SentenceRep:
    tree = split_recursive(sentence)
    graph = merge_tree(tree, lex)
    return SentenceRep(
        sentence=sentence,
        kind=classify_sentence(sentence),
        tree=tree,
        graph=graph,
        roots=graph.proposition_roots,
    )


def _dedupe(words: list[str]) -> list[str]:
    seen = set()
    out = []
    for w in words:
        if w not in seen:
            seen.add(w)
            out.append(w)
    return out


def collect_dimension(
    graph: PropGraph, root: int, dimension: tuple[str, ...]
) -> list[str]:
    """Developmental lemmas reachable from a proposition root along the
    dimension's evolutionary path; empty paths read as ["unknown"]."""
    info = graph.info_for_root(root)
    if dimension == ("action",):
        lemma = graph.dev_lemma_of(root)
        return [lemma or UNKNOWN_LEMMA]
    base = dimension[0]
    slot_ids = [graph.resolve(i) for i in info.slots[base]]
    if len(dimension) == 1:
        lemmas = [graph.dev_lemma_of(i) or UNKNOWN_LEMMA for i in slot_ids]
        return _dedupe(lemmas) or [UNKNOWN_LEMMA]
    sub = dimension[1]
    lemmas = []
    for ins in slot_ids:
        for child in graph.describers.get(ins, {}).get(sub, []):
            lemmas.append(graph.dev_lemma_of(child) or UNKNOWN_LEMMA)
    return _dedupe(lemmas) or [UNKNOWN_LEMMA]


def binary_group_score(
    a: list[str], b: list[str], oracle: Oracle, verb_context: bool = False
) -> float:
    """Two-word groups: shared words count 1 each, the leftover pair (if
    exactly one word remains on each side) contributes its oracle score."""
    shared = set(a) & set(b)
    score = float(len(shared))
    rest_a = [w for w in a if w not in shared]
    rest_b = [w for w in b if w not in shared]
    if len(rest_a) == 1 and len(rest_b) == 1:
        score += oracle.word_similarity(rest_a[0], rest_b[0], verb_context)
    return score / 2.0


def similarity_code(
    lhs: list[str],
    rhs: list[str],
    oracle: Oracle,
    verb_context: bool = False,
    code_hi: float = 0.7,
    code_lo: float = 0.2,
) -> int:
    if not lhs or not rhs:
        raise ValueError("similarity_code needs non-empty word lists")

    def scale(score: float) -> int:
        if score >= code_hi:
            return CODE_IDENTICAL
        if score >= code_lo:
            return CODE_SIMILAR
        return CODE_DIFFERENT

    if len(lhs) == 1 and len(rhs) == 1:
        a, b = lhs[0], rhs[0]
        if a == b:
            return CODE_IDENTICAL
        if a == UNKNOWN_LEMMA or b == UNKNOWN_LEMMA:
            return CODE_SIMILAR
        return scale(oracle.word_similarity(a, b, verb_context))
    if len(lhs) == 1 or len(rhs) == 1:
        single = lhs[0] if len(lhs) == 1 else rhs[0]
        if single == UNKNOWN_LEMMA:
            return CODE_SIMILAR
        return CODE_LENGTH_MISMATCH
    if len(lhs) != len(rhs):
        return CODE_LENGTH_MISMATCH
    if len(lhs) == 2:
        return scale(binary_group_score(lhs, rhs, oracle, verb_context))
    return CODE_LONG_EQUAL


def codes_for_roots(
    g1: PropGraph,
    r1: int,
    g2: PropGraph,
    r2: int,
    oracle: Oracle,
    code_hi: float = 0.7,
    code_lo: float = 0.2,
) -> list[int]:
    codes = []
    for name, path in COMPARISON_DIMENSIONS:
        lhs = collect_dimension(g1, r1, path)
        rhs = collect_dimension(g2, r2, path)
        codes.append(
            similarity_code(
                lhs,
                rhs,
                oracle,
                verb_context=(name == "#action"),
                code_hi=code_hi,
                code_lo=code_lo,
            )
        )
    return codes


def diff_vector_p1(
    rep1: SentenceRep,
    rep2: SentenceRep,
    oracle: Oracle,
    code_hi: float = 0.7,
    code_lo: float = 0.2,
) -> DifferenceVector:
    codes = codes_for_roots(
        rep1.graph, rep1.roots[0], rep2.graph, rep2.roots[0], oracle, code_hi, code_lo
    )
    return DifferenceVector(codes=tuple(codes), pair_kind=PairKind.P1_MINUS)


def align_p2(
    two_sided: SentenceRep,
    single: SentenceRep,
    oracle: Oracle,
    code_hi: float = 0.7,
    code_lo: float = 0.2,
) -> int:
    """Index of the two-proposition side's proposition that the single
    proposition should be compared with: identical action and subject win,
    otherwise the closest of the two on those elements, first on ties."""
    action_i = DIMENSION_INDEX["#action"]
    subject_i = DIMENSION_INDEX["#action|#subject"]
    best_index, best_sum = 0, None
    for i, root in enumerate(two_sided.roots[:2]):
        codes = codes_for_roots(
            two_sided.graph, root, single.graph, single.roots[0], oracle, code_hi, code_lo
        )
        pair_sum = codes[action_i] + codes[subject_i]
        if pair_sum == 0:
            return i
        if best_sum is None or pair_sum < best_sum:
            best_index, best_sum = i, pair_sum
    return best_index


def diff_vector_p2(
    rep1: SentenceRep,
    rep2: SentenceRep,
    oracle: Oracle,
    code_hi: float = 0.7,
    code_lo: float = 0.2,
) -> DifferenceVector:
    n1, n2 = len(rep1.roots), len(rep2.roots)
    if n1 >= 2 and n2 >= 2:
        first = align_p2(rep2, _single_view(rep1, 0), oracle, code_hi, code_lo)
        second = 1 - first
        codes = codes_for_roots(
            rep1.graph, rep1.roots[0], rep2.graph, rep2.roots[first], oracle, code_hi, code_lo
        ) + codes_for_roots(
            rep1.graph, rep1.roots[1], rep2.graph, rep2.roots[second], oracle, code_hi, code_lo
        )
        return DifferenceVector(codes=tuple(codes), pair_kind=PairKind.P2)
    if n1 >= 2:
        two, one, flipped = rep1, rep2, False
    else:
        two, one, flipped = rep2, rep1, True
    chosen = align_p2(two, one, oracle, code_hi, code_lo)
    if flipped:
        codes = codes_for_roots(
            one.graph, one.roots[0], two.graph, two.roots[chosen], oracle, code_hi, code_lo
        )
    else:
        codes = codes_for_roots(
            two.graph, two.roots[chosen], one.graph, one.roots[0], oracle, code_hi, code_lo
        )
    codes = codes + [CODE_DIFFERENT] * P1_LENGTH
    return DifferenceVector(codes=tuple(codes), pair_kind=PairKind.P2)


def _single_view(rep: SentenceRep, index: int) -> SentenceRep:
    view = SentenceRep(
        sentence=rep.sentence,
        kind=rep.kind,
        tree=rep.tree,
        graph=rep.graph,
        roots=[rep.roots[index]],
    )
    return view


# Tokens that never count as overlapping words: grammar glue and the
# placeholders inserted while splitting.
_POD_EXCLUDED_UPOS = frozenset({"ADP", "DET", "PUNCT", "PART", "CCONJ", "SCONJ", "SYM", "X"})


def pod(p: Proposition | None, q: Proposition | None) -> int:
    """Proposition Overlap Degree: shared content lemmas between two
    propositions."""
    if p is None or q is None:
        return 0

    def words(prop: Proposition) -> set[str]:
        return {
            t.lemma.lower()
            for t in prop.tokens
            if t.upos not in _POD_EXCLUDED_UPOS and not t.is_identifier
        }

    return len(words(p) & words(q))


def align_p3(
    list1: list[Proposition | None],
    list2: list["tuple"],
    threshold: int = 1,
) -> list:
    """Greedy reorder of the second proposition list against the first.

    ``list2`` entries travel with their payload (proposition, root); three
    passes move the best-overlapping candidate forward when its overlap
    beats the threshold, keeping the rest stable.
    """
    aligned = list(list2)
    for i in range(3):
        if i >= len(list1) or list1[i] is None:
            continue
        best_j, best_pod = None, threshold
        for j in range(i, len(aligned)):
            entry = aligned[j]
            candidate = entry[0] if entry is not None else None
            overlap = pod(list1[i], candidate)
            if overlap > best_pod:
                best_j, best_pod = j, overlap
        if best_j is not None and best_j != i:
            entry = aligned.pop(best_j)
            aligned.insert(i, entry)
    return aligned


def diff_vector_p3(
    rep1: SentenceRep,
    rep2: SentenceRep,
    oracle: Oracle,
    code_hi: float = 0.7,
    code_lo: float = 0.2,
    pod_threshold: int = 1,
) -> DifferenceVector:
    def first_four(rep: SentenceRep) -> list:
        entries = [
            (leaf, root) for leaf, root in zip(rep.leaves, rep.roots)
        ][:4]
        return entries + [None] * (4 - len(entries))

    side1 = first_four(rep1)
    side2 = align_p3(
        [e[0] if e else None for e in side1], first_four(rep2), pod_threshold
    )
    codes: list[int] = []
    for e1, e2 in zip(side1, side2):
        if e1 is None and e2 is None:
            codes.extend([CODE_IDENTICAL] * P1_LENGTH)
        elif e1 is None or e2 is None:
            codes.extend([CODE_DIFFERENT] * P1_LENGTH)
        else:
            codes.extend(
                codes_for_roots(
                    rep1.graph, e1[1], rep2.graph, e2[1], oracle, code_hi, code_lo
                )
            )
    return DifferenceVector(codes=tuple(codes), pair_kind=PairKind.P3_PLUS)


def diff_vector(
    rep1: SentenceRep,
    rep2: SentenceRep,
    oracle: Oracle,
    code_hi: float = 0.7,
    code_lo: float = 0.2,
    pod_threshold: int = 1,
) -> DifferenceVector:
    kind = classify_pair(rep1.kind, rep2.kind)
    if kind is PairKind.P1_MINUS:
        return diff_vector_p1(rep1, rep2, oracle, code_hi, code_lo)
    if kind is PairKind.P2:
        return diff_vector_p2(rep1, rep2, oracle, code_hi, code_lo)
    return diff_vector_p3(rep1, rep2, oracle, code_hi, code_lo, pod_threshold)

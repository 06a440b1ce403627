"""Acceptance criteria, one test per criterion, each printing a verdict line.

Run with `pytest -s tests/test_acceptance.py` to see the verdict lines
stream; the large-corpus criteria run on the deterministic generated
benchmark corpus (same jsonl/CoNLL-U schema as the real datasets).
"""

import json
import random
import subprocess
import sys
import time
from pathlib import Path

import numpy as np
import pytest

from propnet import (
    FixtureOracle,
    PairCorpus,
    build_representation,
    cognitive_report,
    compute_vectors,
    default_lexicon,
    dimension_stats,
    levene,
    load_stsb_jsonl,
    mann_whitney_u,
    pad_vector,
    parse_dimensions,
    spearman,
    split_prop2,
    split_recursive,
    train_models,
    validate,
)
from propnet.cart import best_split
from propnet.compare import DIMENSION_INDEX, diff_vector_p1
from propnet.harness import load_score_buckets, predict_score
from propnet.stats import rankdata

from . import corpusgen
from .helpers import DictOracle, normalize
from .test_cart import brute_force_best

DATA = Path(__file__).parent / "data"


def verdict(name: str, ok: bool) -> None:
    print(f"ACCEPTANCE {'PASS' if ok else 'FAIL'}: {name}")
    assert ok, name


@pytest.fixture(scope="module")
def full_corpus(tmp_path_factory):
    out = tmp_path_factory.mktemp("bench")
    paths = corpusgen.generate(out)  # 800 train / 200 dev / 1379 test
    records = load_stsb_jsonl(paths["dataset"])
    corpus = PairCorpus.load(records, paths["conllu"])
    oracle = FixtureOracle(paths["oracle"])
    return {"paths": paths, "records": records, "corpus": corpus, "oracle": oracle}


def test_golden_splitting_suite(golden):
    expected = {
        "table2_conjunct": ("I am singing", "I be playing a guitar"),
        "table2_ccomp": ("she thinks identifier_ccomp", "this is a good idea"),
        "table2_acl": ("a cat looks up at the camera", "cat be sitting on sand"),
        "table2_pcomp": ("he goes to school by identifier_pcomp", "he be taking a bus"),
        "table2_advcl": ("we will go to a garden", "it is raining"),
        "table2_xcomp": ("he is going to xcomp_identifier", "he swim"),
        "table2_csubj": ("identifier_csubj could kill the plant", "adding aspirin to the water"),
        "table2_relcl": ("they like the person", "person lives in the street"),
        "relcl_pronoun": ("the book is interesting", "i borrowed book from the library"),
        "relcl_adverb": ("i like the place", "where i live in the street"),
        "relcl_none": ("the book is interesting", "i borrowed from the library"),
    }
    start = time.perf_counter()
    ok = True
    for sid, (main, sub) in expected.items():
        result = split_prop2(golden[sid])
        if normalize(result.main.text) != normalize(main) or normalize(
            result.sub.text
        ) != normalize(sub):
            ok = False
    elapsed = time.perf_counter() - start
    verdict(f"golden splitting suite (11 examples, {elapsed * 1000:.0f} ms)", ok and elapsed < 1.0)


def test_golden_parsing_suite(golden):
    cases = [
        ("table3_riding", "action", "ride"),
        ("table3_riding", "subject", "man"),
        ("table3_riding", "object", "horse"),
        ("table3_sliding", "where", "snow"),
        ("table3_cutting", "aux_obj", "knife"),
        ("table3_pours", "goal", "pot"),
        ("table3_praised", "reason", "work"),
        ("table3_learned", "source", "friend"),
        ("table3_usingsign", "attribute", "young"),
        ("table3_packing", "part_of", "car"),
    ]
    ok = True
    for sid, slot, lemma in cases:
        frame = parse_dimensions(split_recursive(golden[sid]).leaves[0])
        if slot == "action":
            ok = ok and frame.action.lemma == lemma
        elif slot == "attribute":
            ok = ok and lemma in [t.lemma for ns in frame.slots["subject"] for t in ns.attributes]
        elif slot == "part_of":
            ok = ok and lemma in [
                t.lemma for name in frame.slots for ns in frame.slots[name] for t in ns.parts_of
            ]
        else:
            ok = ok and lemma in [ns.head.lemma for ns in frame.slots[slot]]
    verdict("golden parsing suite (Table of dimension rows)", ok)


def test_figure3_ordering(golden):
    tree = split_recursive(golden["fig3"])
    got = [p.text for p in tree.leaves]
    want = [
        "A black and white dog is jumping in the air to identifier_advcl",
        "dog catch a Frisbee",
        "a man is getting identifier_ccomp",
        "his boat clean",
        "he wants a water voyage",
    ]
    verdict("five-leaf ordered decomposition", got == want)


def test_figure4_vector(golden, lexicon):
    oracle = DictOracle({("short", "tall"): 0.1, ("guitar", "piano"): 0.5})
    rep1 = build_representation(golden["fig4_left"], lexicon)
    rep2 = build_representation(golden["fig4_right"], lexicon)
    v = diff_vector_p1(rep1, rep2, oracle)
    ok = len(v.codes) == 24
    for i, code in enumerate(v.codes):
        if i == DIMENSION_INDEX["#action|#subject|#attr"]:
            ok = ok and code == 2
        elif i == DIMENSION_INDEX["#action|#object"]:
            ok = ok and code == 1
        else:
            ok = ok and code == 0
    padded = pad_vector(v.codes, 48)
    ok = ok and len(padded) == 48 and set(padded[24:]) == {0.0}
    verdict("attribute/object difference vector with zero padding", ok)


def test_binary_group_walkthrough():
    from propnet import binary_group_score, similarity_code

    oracle = DictOracle({("banana", "orange"): 0.2})
    score = binary_group_score(["apple", "banana"], ["apple", "orange"], oracle)
    code = similarity_code(["apple", "banana"], ["apple", "orange"], oracle)
    verdict("two-word group walkthrough (0.6 -> similar)", abs(score - 0.6) < 1e-12 and code == 1)


def test_cognitive_statistics_reproduction():
    captions = load_score_buckets(str(DATA / "cognitive_captions.tsv"))
    news = load_score_buckets(str(DATA / "cognitive_news.tsv"))
    cap_stats = dimension_stats({k: v for k, v in captions.items() if v})
    news_stats = dimension_stats({k: v for k, v in news.items() if v})

    expected_captions = {
        "action": (24, 1.40, 0.83),
        "subject": (12, 1.55, 0.83),
        "object": (25, 1.70, 0.56),
        "where": (21, 2.71, 0.85),
        "other": (4, 2.53, 0.80),
    }
    expected_news = {
        "action": (6, 1.83, 0.48),
        "subject": (10, 1.99, 0.77),
        "object": (12, 2.45, 0.80),
        "where": (9, 2.60, 0.95),
        "other": (10, 2.32, 1.36),
    }
    ok = True
    for stats, expected in ((cap_stats, expected_captions), (news_stats, expected_news)):
        for name, (count, mean, std) in expected.items():
            row = stats[name]
            ok = ok and row["count"] == count
            ok = ok and abs(row["mean"] - mean) <= 0.05
            ok = ok and abs(row["std"] - std) <= 0.05

    # pairwise U tests over the caption buckets
    expected_u = {
        ("action", "subject"): (121.5, False),
        ("action", "object"): (217.5, False),
        ("action", "where"): (73.0, True),
        ("action", "other"): (16.5, True),
        ("subject", "object"): (126.5, False),
        ("subject", "where"): (47.0, True),
        ("subject", "other"): (10.5, False),
        ("object", "where"): (84.5, True),
        ("object", "other"): (21.5, False),
        ("where", "other"): (48.0, False),
    }
    for (d1, d2), (u_expected, significant) in expected_u.items():
        u, p = mann_whitney_u(captions[d1], captions[d2])
        ok = ok and u == u_expected
        ok = ok and (p < 0.05) == significant

    # spread test matches under the median center, which is the default
    w, p = levene(captions["action"], captions["subject"], center="median")
    ok = ok and abs(w - 0.0) <= 0.05 and abs(p - 0.9566) <= 0.05
    report = cognitive_report(captions)
    ok = ok and report["levene_center"] == "median"
    verdict("cognitive statistics reproduction (means/stds, U tests, spread)", ok)


def test_cart_and_rank_oracles():
    rng = random.Random(42)
    ok = True
    # greedy root split equals exhaustive search
    for _ in range(120):
        n = rng.randint(4, 12)
        d = rng.randint(1, 3)
        X = [[rng.randint(0, 4) for _ in range(d)] for _ in range(n)]
        y = [round(rng.uniform(0, 5), 3) for _ in range(n)]
        leaf = rng.randint(1, 3)
        ours = best_split(X, y, leaf)
        brute = brute_force_best(X, y, leaf)
        if brute is None:
            ok = ok and ours is None
        else:
            ok = ok and ours is not None and ours[0] == brute[0] and abs(ours[1] - brute[1]) < 1e-12
    # spearman equals a direct average-rank pearson
    for _ in range(120):
        n = rng.randint(3, 30)
        a = [rng.randint(0, 9) for _ in range(n)]
        b = [rng.randint(0, 9) for _ in range(n)]
        if len(set(a)) < 2 or len(set(b)) < 2:
            continue
        direct = float(np.corrcoef(rankdata(a), rankdata(b))[0, 1])
        ok = ok and abs(spearman(a, b) - direct) <= 1e-9
    # U statistics of the two orientations partition the comparisons
    for _ in range(120):
        a = [rng.randint(0, 6) for _ in range(rng.randint(1, 15))]
        b = [rng.randint(0, 6) for _ in range(rng.randint(1, 15))]
        ua, _ = mann_whitney_u(a, b)
        ub, _ = mann_whitney_u(b, a)
        ok = ok and abs(ua + ub - len(a) * len(b)) < 1e-9
    verdict("tree/rank statistics against independent oracles", ok)


def _run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "propnet.cli", *args], capture_output=True, text=True
    )
    assert proc.returncode == 0, proc.stderr
    return proc.stdout


def test_determinism_full_runs(full_corpus, tmp_path):
    paths = full_corpus["paths"]
    outputs = []
    cache_before = Path(paths["cache"]).read_bytes()
    for attempt in (1, 2):
        model = tmp_path / f"model{attempt}.json"
        compare_out = _run_cli(
            "--config", paths["config"],
            "compare", "--dataset", paths["dataset"], "--conllu", paths["conllu"],
            "--split", "test",
        )
        train_out = _run_cli(
            "--config", paths["config"],
            "train", "--dataset", paths["dataset"], "--conllu", paths["conllu"],
            "--model-out", str(model),
        )
        eval_out = _run_cli(
            "--config", paths["config"],
            "evaluate", "--dataset", paths["dataset"], "--conllu", paths["conllu"],
            "--model-in", str(model),
        )
        outputs.append((compare_out, json.loads(train_out)["trained_on"], eval_out, model.read_bytes()))
    ok = (
        outputs[0][0] == outputs[1][0]
        and outputs[0][1] == outputs[1][1]
        and outputs[0][2] == outputs[1][2]
        and outputs[0][3] == outputs[1][3]
        and Path(paths["cache"]).read_bytes() == cache_before
    )
    verdict("byte-identical compare/train/evaluate runs", ok)


def test_monotone_predictions_and_runtime(full_corpus):
    corpus = full_corpus["corpus"]
    oracle = full_corpus["oracle"]
    lex = default_lexicon()
    train_vectors = compute_vectors(corpus, lex, oracle, split="train")
    models = train_models(train_vectors)

    start = time.perf_counter()
    test_vectors = compute_vectors(corpus, lex, oracle, split="test")
    scored = [
        (pv, predict_score(models, pv))
        for pv in test_vectors
        if pv.codes is not None and not pv.degraded
    ]
    rho = spearman([p for _, p in scored], [pv.score for pv, _ in scored]) * 100
    elapsed = time.perf_counter() - start

    zeros = [p for pv, p in scored if set(pv.codes) == {0}]
    different = [p for pv, p in scored if sum(1 for c in pv.codes if c == 2) >= 5]
    ok = (
        len(test_vectors) >= 100
        and len(zeros) >= 10
        and len(different) >= 10
        and sum(zeros) / len(zeros) > sum(different) / len(different)
        and elapsed < 60.0
    )
    print(
        f"  test pairs={len(test_vectors)} rho={rho:.2f} "
        f"mean(all-zero)={sum(zeros)/len(zeros):.2f} "
        f"mean(>=5 twos)={sum(different)/len(different):.2f} wall={elapsed:.1f}s"
    )
    verdict("monotone-sensible predictions on benchmark-scale corpus in <60 s", ok)


def test_graph_validity_fraction(full_corpus):
    corpus = full_corpus["corpus"]
    lex = default_lexicon()
    test_records = [r for r in corpus.records if r.split == "test"]
    total = 0
    degraded = 0
    invalid = 0
    for record in test_records:
        for sentence in corpus.sides(record):
            total += 1
            rep = build_representation(sentence, lex)
            if rep.degraded:
                degraded += 1
            elif validate(rep.graph):
                invalid += 1
    fraction = degraded / total
    print(f"  sentences={total} degraded={degraded} ({fraction:.1%}) invalid_graphs={invalid}")
    verdict("graph invariants hold on the test split (degraded <= 15%)", invalid == 0 and fraction <= 0.15)

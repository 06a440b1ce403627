import json

import pytest

from propnet import (
    FixtureOracle,
    PairCorpus,
    cognitive_report,
    compute_vectors,
    default_lexicon,
    evaluate,
    load_sickr_tsv,
    load_stsb_jsonl,
    select_single_dimension_pairs,
    train_models,
)
from propnet.harness import PairVector, load_score_buckets, predict_score
from propnet.tokens import PairKind

from . import corpusgen


@pytest.fixture(scope="session")
def synth(tmp_path_factory):
    out = tmp_path_factory.mktemp("synth")
    paths = corpusgen.generate(out, n_train=200, n_dev=50, n_test=150)
    records = load_stsb_jsonl(paths["dataset"])
    corpus = PairCorpus.load(records, paths["conllu"])
    oracle = FixtureOracle(paths["oracle"])
    vectors = compute_vectors(corpus, default_lexicon(), oracle, check_graphs=True)
    return {"paths": paths, "records": records, "corpus": corpus, "vectors": vectors}


def test_load_stsb_jsonl(tmp_path):
    path = tmp_path / "d.jsonl"
    path.write_text(
        json.dumps({"pair_id": "x1", "sentence1": "A", "sentence2": "B", "score": 3.5,
                    "genre": "main-news", "split": "test"})
        + "\n"
        + json.dumps({"sentence1": "C", "sentence2": "D", "label": 1.0})
        + "\n"
    )
    records = load_stsb_jsonl(str(path))
    assert records[0].pair_id == "x1"
    assert records[0].score == 3.5
    assert records[0].genre == "main-news"
    assert records[1].score == 1.0
    assert records[1].split == "train"


def test_load_stsb_requires_score(tmp_path):
    path = tmp_path / "d.jsonl"
    path.write_text(json.dumps({"sentence1": "A", "sentence2": "B"}) + "\n")
    with pytest.raises(ValueError, match="score"):
        load_stsb_jsonl(str(path))


def test_load_sickr(tmp_path):
    path = tmp_path / "sick.tsv"
    path.write_text(
        "pair_ID\tsentence_A\tsentence_B\trelatedness_score\tSemEval_set\n"
        "1\tA dog runs\tA cat runs\t3.2\tTRAIN\n"
        "2\tA man sings\tA man dances\t2.1\tTEST\n"
        "3\tx\ty\t1.0\tTRIAL\n"
    )
    records = load_sickr_tsv(str(path))
    assert [r.split for r in records] == ["train", "test", "dev"]
    assert records[1].score == 2.1


def test_corpus_join(synth):
    record = synth["records"][0]
    s1, s2 = synth["corpus"].sides(record)
    assert s1 is not None and s2 is not None
    assert s1.sentence_id == f"{record.pair_id}#1"


def test_vector_lengths_by_kind(synth):
    for pv in synth["vectors"]:
        if pv.codes is None:
            continue
        expected = {PairKind.P1_MINUS: 24, PairKind.P2: 48, PairKind.P3_PLUS: 96}
        assert len(pv.codes) == expected[pv.pair_kind]
        assert set(pv.codes) <= {0, 1, 2, 3, 4}


def test_graphs_valid_when_not_degraded(synth):
    assert all(pv.graph_problems == 0 for pv in synth["vectors"])


def test_train_and_evaluate(synth):
    vectors = synth["vectors"]
    train = [v for v in vectors if v.split == "train"]
    test = [v for v in vectors if v.split == "test"]
    models = train_models(train)
    assert models.short is not None
    report = evaluate(test, models)
    assert report["evaluated"] + report["degraded"] == len(test)
    total = report["total"]["total"]
    assert total["count"] == report["evaluated"]
    kind_counts = sum(report["total"][k.value]["count"] for k in PairKind)
    assert kind_counts == report["evaluated"]
    genre_counts = sum(row["total"]["count"] for row in report["genres"].values())
    assert genre_counts == report["evaluated"]
    assert total["rho"] is not None and total["rho"] > 0


def test_evaluate_all_degraded():
    vectors = [
        PairVector("p", "main-news", "test", 1.0, None, None, True) for _ in range(3)
    ]
    report = evaluate(vectors, train_models([
        PairVector("q", "g", "train", 2.0, PairKind.P1_MINUS, tuple([0] * 24), False)
    ] * 12, min_samples_leaf=10))
    assert report["evaluated"] == 0
    assert report["degraded"] == 3


def test_single_leaf_models_serialize(synth):
    train = [v for v in synth["vectors"] if v.split == "train"]
    models = train_models(train)
    from propnet import ModelBundle

    again = ModelBundle.from_json(models.to_json())
    probe = next(v for v in synth["vectors"] if v.codes is not None and not v.degraded)
    assert predict_score(again, probe) == predict_score(models, probe)


def test_select_single_dimension_pairs_rules():
    def pv(codes, kind=PairKind.P1_MINUS):
        return PairVector("p", "g", "test", 1.0, kind, tuple(codes), False)

    base = [0] * 24
    action2 = list(base)
    action2[0] = 2
    assert select_single_dimension_pairs([pv(action2)])["action"]
    where2 = list(base)
    where2[10] = 2
    assert select_single_dimension_pairs([pv(where2)])["where"]
    goal2 = list(base)
    goal2[13] = 2
    assert select_single_dimension_pairs([pv(goal2)])["other"]
    # identical pair: no bucket
    assert not any(select_single_dimension_pairs([pv(base)]).values())
    # two differing dimensions: excluded
    double = list(action2)
    double[4] = 2
    assert not any(select_single_dimension_pairs([pv(double)]).values())
    # a lone "similar" code does not count as a difference
    similar = list(base)
    similar[0] = 1
    assert not any(select_single_dimension_pairs([pv(similar)]).values())
    # attribute sub-dimension is not one of the eight base roles
    attr2 = list(base)
    attr2[2] = 2
    assert not any(select_single_dimension_pairs([pv(attr2)]).values())
    # P2 pairs are out of scope
    p2 = pv(action2 + base, PairKind.P2)
    assert not any(select_single_dimension_pairs([p2]).values())


def test_load_score_buckets(tmp_path):
    path = tmp_path / "buckets.tsv"
    path.write_text("action\t1.5\naction\t2.5\nwhere\t3.0\n")
    buckets = load_score_buckets(str(path))
    assert buckets["action"] == [1.5, 2.5]
    assert buckets["where"] == [3.0]
    assert buckets["object"] == []


def test_cognitive_report_shape():
    buckets = {
        "action": [1.0, 1.5, 0.5, 2.0, 1.0],
        "where": [3.0, 2.5, 3.5, 2.8, 3.2],
    }
    report = cognitive_report(buckets)
    assert report["stats"]["action"]["count"] == 5
    (u_row,) = report["mann_whitney"]
    assert u_row["dimension1"] == "action"
    assert u_row["significant"] == (u_row["p"] < 0.05)
    (lev_row,) = report["levene"]
    assert "statistic" in lev_row
    assert report["levene_center"] == "median"

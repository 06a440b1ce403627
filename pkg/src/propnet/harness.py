"""Benchmark harness: dataset loaders, vector batches, CART models,
rank-correlation reports and the cognitive dimension analysis."""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .cart import RegressionTree, pad_vector, predict, train_cart
from .compare import (
    DIMENSION_INDEX,
    P2_LENGTH,
    P3_LENGTH,
    build_representation,
    diff_vector,
)
from .graph import HypernymLexicon, validate
from .oracle import Oracle
from .stats import UndefinedStatistic, dimension_stats, levene, mann_whitney_u, spearman
from .tokens import AnnotatedSentence, PairKind, load_conllu

GENRES = ("main-captions", "main-news", "main-forums", "unspecified")

# Difference-vector positions whose lone disagreement defines a cognitive
# bucket; the four sparse roles aggregate into "other".
BUCKET_POSITIONS = {
    DIMENSION_INDEX["#action"]: "action",
    DIMENSION_INDEX["#action|#subject"]: "subject",
    DIMENSION_INDEX["#action|#object"]: "object",
    DIMENSION_INDEX["#action|#where"]: "where",
    DIMENSION_INDEX["#action|#aux_obj"]: "other",
    DIMENSION_INDEX["#action|#goal"]: "other",
    DIMENSION_INDEX["#action|#source"]: "other",
    DIMENSION_INDEX["#action|#reason"]: "other",
}
BUCKET_ORDER = ("action", "subject", "object", "where", "other")


@dataclass(frozen=True)
class StsRecord:
    pair_id: str
    sentence1: str
    sentence2: str
    score: float
    genre: str = "unspecified"
    split: str = "train"


def load_stsb_jsonl(path: str) -> list[StsRecord]:
    """STS-B style JSON lines: sentence1, sentence2, score (or label),
    optional genre and split."""
    records = []
    with open(path, encoding="utf-8") as f:
        for lineno, raw in enumerate(f, start=1):
            line = raw.strip()
            if not line:
                continue
            data = json.loads(line)
            score = data.get("score", data.get("label"))
            if score is None:
                raise ValueError(f"{path}:{lineno}: record without score/label")
            records.append(
                StsRecord(
                    pair_id=str(data.get("pair_id", data.get("idx", lineno))),
                    sentence1=data["sentence1"],
                    sentence2=data["sentence2"],
                    score=float(score),
                    genre=data.get("genre", "unspecified"),
                    split=data.get("split", "train"),
                )
            )
    return records


_SICK_SPLITS = {"TRAIN": "train", "TRIAL": "dev", "TEST": "test"}


def load_sickr_tsv(path: str) -> list[StsRecord]:
    """SICK relatedness TSV with a SemEval_set split column."""
    records = []
    with open(path, encoding="utf-8") as f:
        header = f.readline().rstrip("\n").split("\t")
        col = {name: i for i, name in enumerate(header)}
        for lineno, raw in enumerate(f, start=2):
            line = raw.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            split = parts[col["SemEval_set"]].strip()
            records.append(
                StsRecord(
                    pair_id=parts[col["pair_ID"]] if "pair_ID" in col else str(lineno),
                    sentence1=parts[col["sentence_A"]],
                    sentence2=parts[col["sentence_B"]],
                    score=float(parts[col["relatedness_score"]]),
                    genre="unspecified",
                    split=_SICK_SPLITS.get(split.upper(), split.lower()),
                )
            )
    return records


@dataclass
class PairCorpus:
    records: list[StsRecord]
    sentences: dict[str, AnnotatedSentence]

    @classmethod
    def load(
        cls, records: list[StsRecord], conllu_path: str, aliases: dict | None = None
    ) -> "PairCorpus":
        with open(conllu_path, encoding="utf-8") as f:
            parsed = load_conllu(f, aliases=aliases)
        return cls(records=records, sentences={s.sentence_id: s for s in parsed})

    def sides(self, record: StsRecord) -> tuple[AnnotatedSentence | None, AnnotatedSentence | None]:
        return (
            self.sentences.get(f"{record.pair_id}#1"),
            self.sentences.get(f"{record.pair_id}#2"),
        )


@dataclass
class PairVector:
    pair_id: str
    genre: str
    split: str
    score: float
    pair_kind: PairKind | None
    codes: tuple[int, ...] | None
    degraded: bool
    graph_problems: int = 0


def compute_pair(
    record: StsRecord,
    corpus: PairCorpus,
    lex: HypernymLexicon,
    oracle: Oracle,
    code_hi: float = 0.7,
    code_lo: float = 0.2,
    pod_threshold: int = 1,
    check_graphs: bool = False,
) -> PairVector:
    s1, s2 = corpus.sides(record)
    if s1 is None or s2 is None:
        return PairVector(
            pair_id=record.pair_id,
            genre=record.genre,
            split=record.split,
            score=record.score,
            pair_kind=None,
            codes=None,
            degraded=True,
        )
    rep1 = build_representation(s1, lex)
    rep2 = build_representation(s2, lex)
    vector = diff_vector(rep1, rep2, oracle, code_hi, code_lo, pod_threshold)
    problems = 0
    if check_graphs:
        for rep in (rep1, rep2):
            if not rep.degraded:
                problems += len(validate(rep.graph))
    return PairVector(
        pair_id=record.pair_id,
        genre=record.genre,
        split=record.split,
        score=record.score,
        pair_kind=vector.pair_kind,
        codes=vector.codes,
        degraded=rep1.degraded or rep2.degraded,
        graph_problems=problems,
    )


def compute_vectors(
    corpus: PairCorpus,
    lex: HypernymLexicon,
    oracle: Oracle,
    split: str | None = None,
    jobs: int = 1,
    code_hi: float = 0.7,
    code_lo: float = 0.2,
    pod_threshold: int = 1,
    check_graphs: bool = False,
) -> list[PairVector]:
    records = [r for r in corpus.records if split is None or r.split == split]

    def work(record: StsRecord) -> PairVector:
        return compute_pair(
            record, corpus, lex, oracle, code_hi, code_lo, pod_threshold, check_graphs
        )

    if jobs <= 1:
        return [work(r) for r in records]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(work, records))


# ---------------------------------------------------------------------------
# Models


@dataclass
class ModelBundle:
    """One tree for short pairs, one for long pairs."""

    short: RegressionTree | None
    long: RegressionTree | None

    def to_json(self) -> str:
        return json.dumps(
            {
                "short": json.loads(self.short.to_json()) if self.short else None,
                "long": json.loads(self.long.to_json()) if self.long else None,
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "ModelBundle":
        data = json.loads(text)
        return cls(
            short=RegressionTree.from_json(json.dumps(data["short"])) if data["short"] else None,
            long=RegressionTree.from_json(json.dumps(data["long"])) if data["long"] else None,
        )


def _model_input(pv: PairVector) -> tuple[str, list[float]]:
    if pv.pair_kind is PairKind.P3_PLUS:
        return "long", pad_vector(pv.codes, P3_LENGTH)
    # Single-proposition vectors are padded with zeros up to the short size.
    return "short", pad_vector(pv.codes, P2_LENGTH)


def train_models(
    vectors: list[PairVector], min_samples_leaf: int = 10, seed: int = 0
) -> ModelBundle:
    short_X, short_y, long_X, long_y = [], [], [], []
    for pv in vectors:
        if pv.codes is None or pv.degraded:
            continue
        which, row = _model_input(pv)
        if which == "short":
            short_X.append(row)
            short_y.append(pv.score)
        else:
            long_X.append(row)
            long_y.append(pv.score)
    short = train_cart(short_X, short_y, min_samples_leaf, seed) if short_X else None
    long = train_cart(long_X, long_y, min_samples_leaf, seed) if long_X else None
    return ModelBundle(short=short, long=long)


def predict_score(models: ModelBundle, pv: PairVector) -> float | None:
    which, row = _model_input(pv)
    tree = models.short if which == "short" else models.long
    if tree is None:
        return None
    return predict(tree, row)


# ---------------------------------------------------------------------------
# Evaluation report


def _rho(pred: list[float], truth: list[float]) -> float | None:
    if len(pred) < 2:
        return None
    try:
        return spearman(pred, truth) * 100.0
    except UndefinedStatistic:
        return None


def evaluate(vectors: list[PairVector], models: ModelBundle) -> dict:
    """Correlation report over genre and pair-kind subsets."""
    scored: list[tuple[PairVector, float]] = []
    degraded = 0
    for pv in vectors:
        if pv.degraded or pv.codes is None:
            degraded += 1
            continue
        pred = predict_score(models, pv)
        if pred is None:
            degraded += 1
            continue
        scored.append((pv, pred))

    def cell(items: list[tuple[PairVector, float]]) -> dict:
        return {
            "count": len(items),
            "percent": round(100.0 * len(items) / len(scored), 2) if scored else 0.0,
            "rho": _rho([p for _, p in items], [pv.score for pv, _ in items]),
        }

    kinds = [PairKind.P1_MINUS, PairKind.P2, PairKind.P3_PLUS]
    genres = sorted({pv.genre for pv, _ in scored})
    rows = {}
    for genre in genres:
        g_items = [it for it in scored if it[0].genre == genre]
        rows[genre] = {"total": cell(g_items)}
        for kind in kinds:
            rows[genre][kind.value] = cell(
                [it for it in g_items if it[0].pair_kind is kind]
            )
    total_row = {"total": cell(scored)}
    for kind in kinds:
        total_row[kind.value] = cell([it for it in scored if it[0].pair_kind is kind])

    return {
        "evaluated": len(scored),
        "degraded": degraded,
        "total": total_row,
        "genres": rows,
    }


# ---------------------------------------------------------------------------
# Cognitive dimension analysis


def select_single_dimension_pairs(vectors: list[PairVector]) -> dict[str, list[PairVector]]:
    """Single-proposition pairs whose vector is 2 at exactly one role
    position and 0 everywhere else, grouped by that role."""
    buckets: dict[str, list[PairVector]] = {name: [] for name in BUCKET_ORDER}
    for pv in vectors:
        if pv.pair_kind is not PairKind.P1_MINUS or pv.codes is None or pv.degraded:
            continue
        nonzero = [(i, c) for i, c in enumerate(pv.codes) if c != 0]
        if len(nonzero) != 1:
            continue
        position, code = nonzero[0]
        if code != 2 or position not in BUCKET_POSITIONS:
            continue
        buckets[BUCKET_POSITIONS[position]].append(pv)
    return buckets


def load_score_buckets(path: str) -> dict[str, list[float]]:
    """TSV of (dimension, ground score) rows, e.g. transcribed pair lists."""
    buckets: dict[str, list[float]] = {name: [] for name in BUCKET_ORDER}
    with open(path, encoding="utf-8") as f:
        for raw in f:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            name, score = line.split("\t")[:2]
            buckets.setdefault(name, []).append(float(score))
    return buckets


def cognitive_report(
    buckets: dict[str, list[float]],
    levene_center: str = "median",
    alpha: float = 0.05,
    u_method: str = "asymptotic",
) -> dict:
    names = [n for n in BUCKET_ORDER if buckets.get(n)] + [
        n for n in buckets if n not in BUCKET_ORDER and buckets[n]
    ]
    pairwise_u = []
    pairwise_levene = []
    for i in range(len(names)):
        for j in range(i + 1, len(names)):
            a, b = buckets[names[i]], buckets[names[j]]
            u, p = mann_whitney_u(a, b, method=u_method)
            pairwise_u.append(
                {
                    "dimension1": names[i],
                    "dimension2": names[j],
                    "u": u,
                    "p": p,
                    "significant": p < alpha,
                }
            )
            try:
                w, lp = levene(a, b, center=levene_center)
                pairwise_levene.append(
                    {
                        "dimension1": names[i],
                        "dimension2": names[j],
                        "statistic": w,
                        "p": lp,
                        "significant": lp < alpha,
                    }
                )
            except (UndefinedStatistic, ValueError) as exc:
                pairwise_levene.append(
                    {
                        "dimension1": names[i],
                        "dimension2": names[j],
                        "error": str(exc),
                    }
                )
    return {
        "stats": dimension_stats({n: buckets[n] for n in names}),
        "mann_whitney": pairwise_u,
        "levene": pairwise_levene,
        "levene_center": levene_center,
        "u_method": u_method,
        "alpha": alpha,
    }

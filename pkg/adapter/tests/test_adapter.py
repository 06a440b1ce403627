import json
import subprocess
import sys

from parse_adapter import BuiltinBackend, export_lexicon, open_database, tag, tokenize
from parse_adapter.cli import main as cli_main

from propnet import classify_sentence, load_conllu
from propnet.tokens import SentenceKind


def test_tokenize():
    assert tokenize("A boy, right?") == ["A", "boy", ",", "right", "?"]
    assert tokenize("It's 3.5 points.") == ["It", "'s", "3.5", "points", "."]


def test_tagging_basics():
    tags = tag(tokenize("The young man is riding a horse."))
    assert [(t.upos, t.lemma) for t in tags] == [
        ("DET", "the"), ("ADJ", "young"), ("NOUN", "man"), ("AUX", "be"),
        ("VERB", "ride"), ("DET", "a"), ("NOUN", "horse"), ("PUNCT", "."),
    ]


def test_noun_verb_ambiguity():
    # "runs" after a determiner is nominal, after a subject it is verbal
    verbal = tag(tokenize("The man runs."))
    assert verbal[2].upos == "VERB"
    nominal = tag(tokenize("The runs were long."))
    assert nominal[1].upos == "NOUN"


def test_builtin_parse_is_loadable():
    backend = BuiltinBackend()
    rows = backend.parse_sentence("A boy is playing football in the park.")
    from parse_adapter.conllu import block

    sentences = load_conllu(block("x", "text", rows) + "\n")
    assert len(sentences) == 1
    s = sentences[0]
    assert s.root.form == "playing"
    assert classify_sentence(s) is SentenceKind.PROP1


def test_canonical_example_structure():
    backend = BuiltinBackend()
    rows = backend.parse_sentence("A boy is playing football.")
    playing = next(r for r in rows if r.form == "playing")
    assert playing.upos == "VERB" and playing.head == 0
    boy = next(r for r in rows if r.form == "boy")
    assert boy.dep == "nsubj"
    assert rows[boy.head - 1].form == "playing"


def test_cli_raw_roundtrip(tmp_path):
    src = tmp_path / "raw.txt"
    src.write_text("A boy is playing football.\n\nThe dog runs in the park.\n")
    out = tmp_path / "out.conllu"
    assert cli_main(["--in", str(src), "--format", "raw", "--out", str(out)]) == 0
    sentences = load_conllu(out.read_text())
    assert [s.sentence_id for s in sentences] == ["raw-000001", "raw-000002"]


def test_cli_stsb_ids(tmp_path):
    src = tmp_path / "pairs.jsonl"
    rows = [
        {"pair_id": "p1", "sentence1": "A boy runs.", "sentence2": "A girl dances.", "score": 2.0},
        {"pair_id": "p2", "sentence1": "A cat sleeps.", "sentence2": "A dog eats.", "score": 1.0},
    ]
    src.write_text("\n".join(json.dumps(r) for r in rows) + "\n")
    out = tmp_path / "out.conllu"
    assert cli_main(["--in", str(src), "--format", "stsb", "--out", str(out)]) == 0
    ids = [s.sentence_id for s in load_conllu(out.read_text())]
    assert ids == ["p1#1", "p1#2", "p2#1", "p2#2"]


def test_cli_sickr(tmp_path):
    src = tmp_path / "sick.tsv"
    src.write_text(
        "pair_ID\tsentence_A\tsentence_B\trelatedness_score\tSemEval_set\n"
        "7\tA man sings.\tA man dances.\t3.0\tTRAIN\n"
    )
    out = tmp_path / "out.conllu"
    assert cli_main(["--in", str(src), "--format", "sickr", "--out", str(out)]) == 0
    ids = [s.sentence_id for s in load_conllu(out.read_text())]
    assert ids == ["7#1", "7#2"]


def test_cli_empty_input(tmp_path):
    src = tmp_path / "empty.txt"
    src.write_text("")
    out = tmp_path / "out.conllu"
    assert cli_main(["--in", str(src), "--format", "raw", "--out", str(out)]) == 0
    assert out.read_text() == ""


def test_cli_unknown_backend_fails(tmp_path):
    src = tmp_path / "raw.txt"
    src.write_text("A boy runs.\n")
    out = tmp_path / "out.conllu"
    code = cli_main(["--in", str(src), "--out", str(out), "--parser", "nosuch"])
    assert code == 1


def test_cli_entry_point(tmp_path):
    src = tmp_path / "raw.txt"
    src.write_text("A boy runs.\n")
    out = tmp_path / "out.conllu"
    proc = subprocess.run(
        [sys.executable, "-m", "parse_adapter.cli", "--in", str(src), "--out", str(out)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert out.exists()


# -- lexicon export -----------------------------------------------------------


def test_bundled_database_flags():
    db = open_database("bundled")
    assert db.is_physical_entity("man")
    assert db.is_physical_entity("car")
    assert not db.is_physical_entity("idea")
    assert db.knows("idea")
    assert not db.knows("zyzzyva")


def test_export_lexicon(tmp_path):
    out = tmp_path / "lexicon.tsv"
    count = export_lexicon(["man", "idea", "zyzzyva", "Garden"], str(out), source="bundled")
    rows = dict(
        line.split("\t") for line in out.read_text().strip().splitlines()
    )
    assert rows["man"] == "1"
    assert rows["idea"] == "0"
    assert rows["garden"] == "1"
    assert "zyzzyva" not in rows  # unknown lemmas stay absent
    assert count == 3


def test_export_lexicon_feeds_primary(tmp_path):
    out = tmp_path / "lexicon.tsv"
    export_lexicon(["man", "idea"], str(out), source="bundled")
    from propnet import HypernymLexicon

    lex = HypernymLexicon.load(str(out))
    assert lex.is_physical("man")
    assert not lex.is_physical("idea")
    assert not lex.is_physical("zyzzyva")  # default

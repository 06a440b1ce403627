"""CoNLL-U emission for parsed sentences."""

from __future__ import annotations

from .parser import Parsed


def block(sent_id: str, text: str, rows: list[Parsed]) -> str:
    lines = [f"# sent_id = {sent_id}", f"# text = {text}"]
    for i, row in enumerate(rows, start=1):
        lines.append(
            "\t".join(
                [
                    str(i),
                    row.form,
                    row.lemma,
                    row.upos,
                    "_",
                    "_",
                    str(row.head),
                    row.dep,
                    "_",
                    "_",
                ]
            )
        )
    return "\n".join(lines)


def write_blocks(blocks: list[str], path: str) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as f:
        f.write("\n\n".join(blocks))
        if blocks:
            f.write("\n")
    import os

    os.replace(tmp, path)

"""CSV and JSON forms of the N and M tables.

CSV: header ``index,word,value``. JSON: ``{"n", "r", "entries": [{"i", "word", "value"}]}``
with values as decimal strings.
"""

import csv
import io
import json

from .seqcore import Entry, SeqTable
from .words import parse_word, render


def table_to_csv(table: SeqTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["index", "word", "value"])
    for e in table.entries:
        w.writerow([e.index, render(e.word), str(e.value)])
    return buf.getvalue()


def table_from_csv(text: str, n: int, r: int, cls=SeqTable) -> SeqTable:
    rows = list(csv.DictReader(io.StringIO(text)))
    return cls(n, r, tuple(Entry(int(x["index"]), parse_word(x["word"]), int(x["value"])) for x in rows))


def table_to_dict(table: SeqTable) -> dict:
    return {
        "n": table.n,
        "r": table.r,
        "entries": [{"i": e.index, "word": render(e.word), "value": str(e.value)} for e in table.entries],
    }


def table_to_json(table: SeqTable) -> str:
    return json.dumps(table_to_dict(table))


def table_from_json(text: str, cls=SeqTable) -> SeqTable:
    d = json.loads(text)
    entries = tuple(Entry(int(x["i"]), parse_word(x["word"]), int(x["value"])) for x in d["entries"])
    return cls(int(d["n"]), int(d["r"]), entries)
